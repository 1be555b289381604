use std::ops::AddAssign;

use crate::error::Result;
use crate::graph::Graph;
use crate::matrix::WalkPowers;
use crate::scalar::Semiring;

/// Walk counts from one vertex to every other vertex, across powers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexProfile<T> {
    /// `((A^k)_ii)_{k=1..kmax}`
    pub diagonal: Vec<T>,
    /// One tuple `((A^k)_ij)_{k=1..kmax}` per `j != i`, sorted ascending.
    pub tuples: Vec<Vec<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedProfile<T> {
    kmax: usize,
    vertices: Vec<VertexProfile<T>>,
}

impl<T> ExtendedProfile<T> {
    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn vertex(&self, i: usize) -> &VertexProfile<T> {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[VertexProfile<T>] {
        &self.vertices
    }
}

impl<T: Ord + Clone> ExtendedProfile<T> {
    /// Vertex profiles sorted ascending; equal for isomorphic graphs.
    pub fn canonical(&self) -> Vec<VertexProfile<T>> {
        let mut v = self.vertices.clone();
        v.sort();
        v
    }

    pub fn equivalent(&self, other: &Self) -> bool {
        self.kmax == other.kmax && self.canonical() == other.canonical()
    }
}

/// For each vertex `i`, the multiset of tuples `((A^k)_ij)_k` over `j != i`.
/// Each tuple stays aligned on its target `j` across all powers; only whole
/// tuples are sorted.
pub fn extended_profile<T>(g: &Graph, kmax: usize) -> Result<ExtendedProfile<T>>
where
    T: Semiring + Ord + for<'a> AddAssign<&'a T> + Send + Sync,
{
    if kmax == 0 {
        return Err(crate::Error::InvalidArgument(
            "kmax must be at least 1".into(),
        ));
    }
    let n = g.n();
    // entries[i][j] collects (A^k)_ij for k = 1..=kmax
    let mut entries: Vec<Vec<Vec<T>>> = vec![vec![Vec::with_capacity(kmax); n]; n];
    for m in WalkPowers::<T>::new(g).take(kmax) {
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, tuple) in row.iter_mut().enumerate() {
                tuple.push(m[i * n + j].clone());
            }
        }
    }
    let vertices = entries
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            let diagonal = row.remove(i);
            row.sort();
            VertexProfile {
                diagonal,
                tuples: row,
            }
        })
        .collect();
    Ok(ExtendedProfile { kmax, vertices })
}
