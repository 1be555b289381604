use num_integer::Integer;
use num_traits::FromPrimitive;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::invariants::InvariantTable;
use crate::scalar::Ring;

/// Power traces `t[k] = Tr A^k` for `k = 1..=kmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSequence<T>(Vec<T>);

impl<T> TraceSequence<T> {
    pub fn new(traces: Vec<T>) -> Self {
        TraceSequence(traces)
    }

    /// `Tr A^k`, `k >= 1`.
    pub fn get(&self, k: usize) -> &T {
        &self.0[k - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }
}

/// Column sums of the walk table: `Σ_i d[k][i] = Tr A^k`.
pub fn power_traces<S, T>(t: &InvariantTable<S>) -> TraceSequence<T>
where
    S: Clone,
    T: Ring + From<S>,
{
    TraceSequence(
        t.rows()
            .iter()
            .map(|row| {
                row.iter()
                    .fold(T::zero(), |acc, x| acc + T::from(x.clone()))
            })
            .collect(),
    )
}

/// Newton's identities: with `c_k = a_{n-k}` and `c_0 = 1`,
/// `k c_k = -Σ_{j=1..k} c_{k-j} t_j`. Every division is exact for a genuine
/// integer matrix; a nonzero remainder is reported as corrupted input.
pub fn charpoly_from_traces<T>(t: &TraceSequence<T>, n: usize) -> Result<Polynomial<T>>
where
    T: Ring + Integer + FromPrimitive,
{
    if t.len() < n {
        return Err(Error::InsufficientPowers {
            required: n,
            available: t.len(),
        });
    }
    let mut c: Vec<T> = Vec::with_capacity(n + 1);
    c.push(T::one());
    for k in 1..=n {
        let s = (1..=k).fold(T::zero(), |acc, j| {
            acc + c[k - j].clone() * t.get(j).clone()
        });
        let kk = T::from_usize(k).expect("degree fits the scalar type");
        let (q, r) = (-s).div_rem(&kk);
        if !r.is_zero() {
            return Err(Error::InexactDivision { step: k });
        }
        c.push(q);
    }
    c.reverse();
    Ok(Polynomial::new(c))
}
