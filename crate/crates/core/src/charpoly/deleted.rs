//! Vertex-deleted characteristic polynomials from diagonal walk counts.
//!
//! Dividing `p(X)` by `X - A` and reading off the `i`-th diagonal entry gives
//! the coefficient of `x^{n-1-m}` in `p_i` as
//! `Σ_{r=0..m} a_{n-r} (A^{m-r})_ii` with `a_n = 1` and `(A^0)_ii = 1`.
//! Summing over `i` yields `Σ_i p_i = p'`.

use num_integer::Integer;
use num_traits::FromPrimitive;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::invariants::InvariantTable;
use crate::scalar::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletedCharPolys<T>(Vec<Polynomial<T>>);

impl<T> DeletedCharPolys<T> {
    pub fn new(polys: Vec<Polynomial<T>>) -> Self {
        DeletedCharPolys(polys)
    }

    pub fn get(&self, i: usize) -> &Polynomial<T> {
        &self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Polynomial<T>] {
        &self.0
    }
}

/// `p_i` for every vertex, from the walk table (powers up to `n - 1`) and
/// the characteristic polynomial `p` of the same matrix.
pub fn vertex_deleted_charpolys<S, T>(
    t: &InvariantTable<S>,
    p: &Polynomial<T>,
) -> Result<DeletedCharPolys<T>>
where
    S: Clone,
    T: Ring + From<S> + PartialEq,
{
    let n = t.n();
    if p.degree() != Some(n) || !p.is_monic() {
        return Err(Error::InvalidArgument(format!(
            "expected a monic polynomial of degree {n}, got degree {:?}",
            p.degree()
        )));
    }
    let need = n.saturating_sub(1);
    if t.kmax() < need {
        return Err(Error::InsufficientPowers {
            required: need,
            available: t.kmax(),
        });
    }
    // a[r] = a_{n-r}
    let a: Vec<T> = (0..=n).map(|r| p.coeff(n - r)).collect();
    let walks = |k: usize, i: usize| -> T {
        if k == 0 {
            T::one()
        } else {
            T::from(t.get(k, i).clone())
        }
    };
    let polys = (0..n)
        .map(|i| {
            // high-to-low: coefficient of x^{n-1-m}
            let mut c: Vec<T> = (0..n)
                .map(|m| (0..=m).fold(T::zero(), |acc, r| acc + a[r].clone() * walks(m - r, i)))
                .collect();
            c.reverse();
            Polynomial::new(c)
        })
        .collect();
    Ok(DeletedCharPolys(polys))
}

/// `Σ_i p_i == p'`, coefficient by coefficient.
pub fn check_derivative_identity<T>(d: &DeletedCharPolys<T>, p: &Polynomial<T>) -> bool
where
    T: Ring + FromPrimitive + PartialEq,
{
    d.0.iter().cloned().sum::<Polynomial<T>>() == p.derivative()
}

/// Invariants recovered from the deleted polynomials alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveredInvariants<T> {
    /// Walk table up to power `n - 1`.
    pub table: InvariantTable<T>,
    /// `a_1, ..., a_{n-1}`; the constant term `a_0` is not determined.
    pub coefficients: Vec<T>,
}

/// Inverts [`vertex_deleted_charpolys`]: `Σ p_i = p'` gives
/// `a_{n-m} = (Σ_i [x^{n-1-m}] p_i) / (n - m)`, and the triangular expansion
/// then yields `(A^m)_ii` for `m = 1..n-1`.
pub fn invariants_from_deleted_charpolys<T>(
    d: &DeletedCharPolys<T>,
) -> Result<RecoveredInvariants<T>>
where
    T: Ring + Integer + FromPrimitive,
{
    let n = d.len();
    if n == 0 {
        return Err(Error::InvalidArgument("no polynomials given".into()));
    }
    for (i, p) in d.0.iter().enumerate() {
        if p.degree() != Some(n - 1) || !p.is_monic() {
            return Err(Error::Integrity(format!(
                "p_{i} must be monic of degree {}, got degree {:?}",
                n - 1,
                p.degree()
            )));
        }
    }
    // c[i][m] = coefficient of x^{n-1-m} in p_i
    let c: Vec<Vec<T>> =
        d.0.iter()
            .map(|p| (0..n).map(|m| p.coeff(n - 1 - m)).collect())
            .collect();

    // a[r] = a_{n-r}, r = 0..n-1
    let mut a: Vec<T> = Vec::with_capacity(n);
    for m in 0..n {
        let s = c.iter().fold(T::zero(), |acc, row| acc + row[m].clone());
        let div = T::from_usize(n - m).expect("degree fits the scalar type");
        let (q, r) = s.div_rem(&div);
        if !r.is_zero() {
            return Err(Error::Integrity(format!(
                "sum of deleted polynomials is not a derivative (x^{} coefficient)",
                n - 1 - m
            )));
        }
        a.push(q);
    }
    if !a[0].is_one() {
        return Err(Error::Integrity(
            "sum of deleted polynomials has wrong leading coefficient".into(),
        ));
    }

    // walks[m][i] = (A^m)_ii, m = 0..n-1
    let mut walks: Vec<Vec<T>> = vec![vec![T::one(); n]];
    for m in 1..n {
        let row = (0..n)
            .map(|i| {
                (1..=m).fold(c[i][m].clone(), |acc, r| {
                    acc - a[r].clone() * walks[m - r][i].clone()
                })
            })
            .collect();
        walks.push(row);
    }
    walks.remove(0);
    let table = InvariantTable::from_rows(n, walks)?;
    // a_1..a_{n-1}: a_k = a[n-k]
    let coefficients = (1..n).map(|k| a[n - k].clone()).collect();
    Ok(RecoveredInvariants {
        table,
        coefficients,
    })
}
