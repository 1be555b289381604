use super::{Spectrum, Tolerances};
use crate::scalar::Real;

/// Solves `Σ_j x_j^k z_j = b_k` for `k = 0..n-1` in place, with the
/// Björck–Pereyra recurrence for the transposed Vandermonde system.
/// `O(n^2)`; the nodes must be distinct.
pub fn solve_dual_vandermonde<T: Real>(x: &[T], b: &mut [T]) {
    let n = x.len();
    assert_eq!(b.len(), n, "right-hand side must match the node count");
    if n < 2 {
        return;
    }
    let last = n - 1;
    for k in 0..last {
        for i in (k + 1..=last).rev() {
            b[i] -= x[k] * b[i - 1];
        }
    }
    for k in (0..last).rev() {
        for i in k + 1..=last {
            b[i] /= x[i] - x[i - k - 1];
        }
        for i in k..last {
            b[i] -= b[i + 1];
        }
    }
}

/// Squared eigenvector components of one vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct VSquares<T> {
    /// `weights[j] = U_ij^2`, aligned with the spectrum's eigenvalues.
    pub weights: Vec<T>,
    /// Largest relative residual over the walk equations beyond `n - 1`,
    /// if the column had any.
    pub residual: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolveError {
    /// Two eigenvalues coincide within tolerance.
    NonGeneric,
    /// Fewer than `n - 1` walk counts supplied.
    TooShort { needed: usize, got: usize },
    /// A squared entry came out clearly negative.
    Negative { index: usize, value: f64 },
    /// The surplus equations are not satisfied.
    Residual { value: f64 },
}

/// Solves `d_k = Σ_j λ_j^k w_j` for `k = 0..n-1` (with `d_0 = 1`) for one
/// vertex. `walks[k - 1] = d_k`; entries past `n - 1` are only used to
/// measure the residual.
pub fn solve_v_squares<T: Real>(
    spec: &Spectrum<T>,
    walks: &[T],
    tol: &Tolerances,
) -> Result<VSquares<T>, SolveError> {
    if spec.is_degenerate() {
        return Err(SolveError::NonGeneric);
    }
    let lambda = spec.eigenvalues();
    let n = lambda.len();
    if walks.len() + 1 < n {
        return Err(SolveError::TooShort {
            needed: n.saturating_sub(1),
            got: walks.len(),
        });
    }
    let mut w: Vec<T> = std::iter::once(T::one())
        .chain(walks[..n - 1].iter().copied())
        .collect();
    solve_dual_vandermonde(lambda, &mut w);

    for (index, x) in w.iter_mut().enumerate() {
        let v = x.as_f64();
        if v < -tol.clamp {
            return Err(SolveError::Negative { index, value: v });
        }
        if v < 0.0 {
            *x = T::zero();
        }
    }

    let mut residual = None;
    for (k, d) in walks.iter().enumerate().skip(n - 1) {
        let power = (k + 1) as i32;
        let lhs: f64 = lambda
            .iter()
            .zip(&w)
            .map(|(l, x)| l.as_f64().powi(power) * x.as_f64())
            .sum();
        let rel = (lhs - d.as_f64()).abs() / d.as_f64().abs().max(1.0);
        residual = Some(residual.map_or(rel, |r: f64| r.max(rel)));
    }
    if let Some(r) = residual {
        if r > tol.residual {
            return Err(SolveError::Residual { value: r });
        }
    }
    Ok(VSquares {
        weights: w,
        residual,
    })
}
