//! Dense matrix helpers over a semiring.

use std::ops::AddAssign;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::scalar::Semiring;

/// Classical cubic product of two square matrices.
pub fn mat_mul<T: Semiring>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(T::zero(), |acc, l| acc + a[i][l].clone() * b[l][j].clone()))
                .collect()
        })
        .collect()
}

/// Successive powers `A, A^2, A^3, ...` of a graph's adjacency matrix.
///
/// Each step is the classical product with the 0/1 matrix `A`, which reduces
/// to summing `(A^k)_{il}` over the neighbors `l` of `j`. Rows are computed in
/// parallel; every entry is produced by the same sequence of additions as the
/// sequential loop, so results do not depend on the thread count.
pub struct WalkPowers<'g, T> {
    graph: &'g Graph,
    neighbors: Vec<Vec<usize>>,
    current: Option<Vec<T>>,
}

impl<'g, T> WalkPowers<'g, T>
where
    T: Semiring + for<'a> AddAssign<&'a T> + Send + Sync,
{
    pub fn new(graph: &'g Graph) -> Self {
        let neighbors = (0..graph.n())
            .map(|i| graph.neighbors(i).collect())
            .collect();
        WalkPowers {
            graph,
            neighbors,
            current: None,
        }
    }

    fn first(&self) -> Vec<T> {
        let n = self.graph.n();
        let mut m = vec![T::zero(); n * n];
        for (i, j) in self.graph.edges() {
            m[i * n + j] = T::one();
            m[j * n + i] = T::one();
        }
        m
    }

    fn step(&self, cur: &[T]) -> Vec<T> {
        let n = self.graph.n();
        let mut next = vec![T::zero(); n * n];
        if n == 0 {
            return next;
        }
        next.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
            let src = &cur[i * n..(i + 1) * n];
            for (j, out) in row.iter_mut().enumerate() {
                for &l in &self.neighbors[j] {
                    *out += &src[l];
                }
            }
        });
        next
    }
}

impl<T> Iterator for WalkPowers<'_, T>
where
    T: Semiring + for<'a> AddAssign<&'a T> + Send + Sync,
{
    /// Row-major `n x n` matrix.
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        let next = match &self.current {
            None => self.first(),
            Some(cur) => self.step(cur),
        };
        self.current = Some(next.clone());
        Some(next)
    }
}
