//! Division-free characteristic polynomial (Berkowitz).
//!
//! With `A_{r+1} = [[A_r, S], [R, a]]`, the coefficient vector of
//! `det(xI - A_{r+1})` is a lower-triangular Toeplitz matrix with first column
//! `(1, -a, -R S, -R A_r S, ..., -R A_r^{r-1} S)` applied to that of `A_r`.
//! Only ring operations are used.

use crate::graph::Graph;
use crate::scalar::Ring;

use super::Polynomial;

/// `det(xI - m)` for a square matrix over any commutative ring.
pub fn charpoly_of_matrix<T: Ring>(m: &[Vec<T>]) -> Polynomial<T> {
    let n = m.len();
    // highest-degree coefficient first
    let mut p: Vec<T> = vec![T::one()];
    for r in 0..n {
        let a = m[r][r].clone();
        let mut col: Vec<T> = Vec::with_capacity(r + 2);
        col.push(T::one());
        col.push(-a);
        // v = A_r^j S
        let mut v: Vec<T> = (0..r).map(|i| m[i][r].clone()).collect();
        for j in 0..r {
            let rv = (0..r).fold(T::zero(), |acc, i| acc + m[r][i].clone() * v[i].clone());
            col.push(-rv);
            if j + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).fold(T::zero(), |acc, l| acc + m[i][l].clone() * v[l].clone()))
                    .collect();
            }
        }
        let next: Vec<T> = (0..r + 2)
            .map(|row| {
                (0..=r.min(row)).fold(T::zero(), |acc, c| {
                    if row - c < col.len() {
                        acc + col[row - c].clone() * p[c].clone()
                    } else {
                        acc
                    }
                })
            })
            .collect();
        p = next;
    }
    p.reverse();
    Polynomial::new(p)
}

/// Exact characteristic polynomial of the adjacency matrix.
pub fn charpoly_direct<T: Ring>(g: &Graph) -> Polynomial<T> {
    charpoly_of_matrix(&g.adjacency_matrix::<T>())
}
