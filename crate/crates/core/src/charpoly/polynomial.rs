use std::fmt;

use num_traits::{FromPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::scalar::{Ring, Semiring};

/// Dense univariate polynomial, coefficients stored constant term first.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Semiring> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool
    where
        T: PartialEq,
    {
        self.leading().is_some_and(|c| *c == T::one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self
    where
        T: FromPrimitive,
    {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| T::from_usize(k).expect("degree fits the scalar type") * c.clone())
                .collect(),
        )
    }

    pub fn map<U: Semiring>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Semiring> std::ops::Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Semiring> std::iter::Sum for Polynomial<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

/// Renders like `x^3 - 3x - 2`.
impl<T> fmt::Display for Polynomial<T>
where
    T: Ring + PartialOrd + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag == T::one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `{"degree": n, "coeffs": ["a_0", ..., "a_n"]}`.
impl<T: fmt::Display + Semiring> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        let mut st = s.serialize_struct("Polynomial", 2)?;
        st.serialize_field("degree", &self.degree())?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_displays() {
        let p = Polynomial::new(vec![-2i64, -3, 0, 1, 0]);
        assert_eq!(p.degree(), Some(3));
        assert!(p.is_monic());
        assert_eq!(p.to_string(), "x^3 - 3x - 2");
        assert_eq!(Polynomial::new(vec![0i64, 0, 1]).to_string(), "x^2");
        assert_eq!(Polynomial::new(vec![5i64, -1]).to_string(), "-x + 5");
        assert_eq!(Polynomial::<i64>::zero().to_string(), "0");
        assert_eq!(Polynomial::new(vec![0i64, 2, -4]).to_string(), "-4x^2 + 2x");
    }

    #[test]
    fn derivative_and_eval() {
        let p = Polynomial::new(vec![-2i64, -3, 0, 1]);
        assert_eq!(p.derivative(), Polynomial::new(vec![-3, 0, 3]));
        assert_eq!(p.eval(&2), 0);
        assert_eq!(p.eval(&-1), 0);
        assert_eq!(Polynomial::new(vec![7i64]).derivative(), Polynomial::zero());
    }

    #[test]
    fn json_shape() {
        let p = Polynomial::new(vec![-1i64, 0, 1]);
        assert_eq!(
            serde_json::to_value(&p).unwrap(),
            serde_json::json!({"degree": 2, "coeffs": ["-1", "0", "1"]})
        );
    }
}
