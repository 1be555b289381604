//! Scalar traits the numeric code is generic over.
//!
//! Walk counting needs only a commutative semiring (`BigUint`, `u64`, `f64`),
//! determinant-style polynomial work needs a ring (`BigInt`, `i64`,
//! `Ratio<BigInt>`), and the spectral side needs a real field (`f32`, `f64`).

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::RealField;
use num_traits::{One, Zero};

/// Commutative semiring with additive and multiplicative identities.
pub trait Semiring: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> {}

impl<T> Semiring for T where T: Clone + Zero + One + Add<Output = T> + Mul<Output = T> {}

/// Commutative ring.
pub trait Ring: Semiring + Sub<Output = Self> + Neg<Output = Self> {}

impl<T> Ring for T where T: Semiring + Sub<Output = T> + Neg<Output = T> {}

/// Floating point field used for eigenvalues and eigenvector entries.
pub trait Real: RealField + Copy {
    fn of_f64(x: f64) -> Self;
    fn as_f64(self) -> f64;
}

impl Real for f64 {
    fn of_f64(x: f64) -> Self {
        x
    }
    fn as_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    fn of_f64(x: f64) -> Self {
        x as f32
    }
    fn as_f64(self) -> f64 {
        self as f64
    }
}
