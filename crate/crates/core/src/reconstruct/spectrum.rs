use nalgebra::DMatrix;
use num_bigint::BigInt;
use serde::Serialize;

use crate::charpoly::{real_roots, Polynomial, RootError};
use crate::graph::Graph;
use crate::scalar::Real;

/// Eigenvalues in descending order with their consecutive gaps.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum<T> {
    eigenvalues: Vec<T>,
    gaps: Vec<T>,
    degenerate: bool,
}

impl<T: Real> Spectrum<T> {
    /// Sorts `values` descending and flags the spectrum as degenerate when
    /// some gap is below `rel_gap * max(1, max |λ|)`.
    pub fn new(mut values: Vec<T>, rel_gap: f64) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        let gaps: Vec<T> = values.windows(2).map(|w| w[0] - w[1]).collect();
        let scale = values.iter().fold(1.0f64, |m, x| m.max(x.as_f64().abs()));
        let degenerate = gaps.iter().any(|g| g.as_f64() < rel_gap * scale);
        Spectrum {
            eigenvalues: values,
            gaps,
            degenerate,
        }
    }

    fn repeated(values: Vec<T>) -> Self {
        let mut s = Spectrum::new(values, 0.0);
        s.degenerate = true;
        s
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn gaps(&self) -> &[T] {
        &self.gaps
    }

    pub fn min_gap(&self) -> Option<T> {
        self.gaps
            .iter()
            .copied()
            .reduce(|a, b| if b < a { b } else { a })
    }

    /// True when two eigenvalues are (numerically or exactly) equal.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

/// Adjacency spectrum via the symmetric eigensolver.
pub fn compute_spectrum<T: Real>(g: &Graph, rel_gap: f64) -> Spectrum<T> {
    let n = g.n();
    let m = DMatrix::<T>::from_fn(n, n, |i, j| {
        if g.has_edge(i, j) {
            T::one()
        } else {
            T::zero()
        }
    });
    let values: Vec<T> = m.symmetric_eigenvalues().iter().copied().collect();
    Spectrum::new(values, rel_gap)
}

/// Roots of an exact characteristic polynomial. A polynomial with a repeated
/// root is reported as degenerate without numerical root finding; its
/// eigenvalues are then left empty.
pub fn spectrum_from_polynomial<T: Real>(
    p: &Polynomial<BigInt>,
    rel_gap: f64,
) -> Result<Spectrum<T>, RootError> {
    match real_roots(p, 96) {
        Ok(roots) => Ok(Spectrum::new(
            roots.into_iter().map(T::of_f64).collect(),
            rel_gap,
        )),
        Err(RootError::Repeated) => Ok(Spectrum::repeated(Vec::new())),
        Err(e) => Err(e),
    }
}
