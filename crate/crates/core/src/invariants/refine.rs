use std::ops::AddAssign;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Semiring;

/// Each round replaces every vertex's vector `c(v)` with `c(v)` followed by
/// the componentwise sum of `c(u)` over neighbors `u`. Vector length doubles
/// per round. All input vectors must have the same length.
pub fn neighbor_sum_refinement<T>(
    g: &Graph,
    colors: &[Vec<T>],
    rounds: usize,
) -> Result<Vec<Vec<T>>>
where
    T: Semiring + for<'a> AddAssign<&'a T>,
{
    if colors.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            actual: colors.len(),
        });
    }
    let width = colors.first().map_or(0, Vec::len);
    if let Some(bad) = colors.iter().find(|c| c.len() != width) {
        return Err(Error::SizeMismatch {
            expected: width,
            actual: bad.len(),
        });
    }
    let mut cur = colors.to_vec();
    for _ in 0..rounds {
        cur = (0..g.n())
            .map(|v| {
                let w = cur[v].len();
                let mut sum = vec![T::zero(); w];
                for u in g.neighbors(v) {
                    for (s, x) in sum.iter_mut().zip(&cur[u]) {
                        *s += x;
                    }
                }
                let mut out = cur[v].clone();
                out.extend(sum);
                out
            })
            .collect();
    }
    Ok(cur)
}
