//! Isomorphism search seeded by walk invariants.
//!
//! Certificates reject most non-isomorphic pairs outright. Otherwise
//! vertices are split into classes by their walk vectors, neighbor sums and
//! extended profiles, and a backtracking search grows a partial map neighbor
//! by neighbor, only pairing vertices of the same class and keeping adjacency
//! consistent with everything mapped so far. Complete maps are verified
//! before being returned.

mod brute;
mod search;

pub use brute::{brute_force_isomorphism, BRUTE_FORCE_LIMIT};
pub use search::{find_isomorphism, vertex_classes, SearchConfig, VertexClasses};

use std::time::Duration;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};
use crate::invariants::Difference;

/// Why two graphs were declared non-isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Residue certificates already differ.
    ModularCertificate {
        modulus: String,
        #[serde(flatten)]
        difference: Difference,
    },
    Certificate {
        #[serde(flatten)]
        difference: Difference,
    },
    /// Refined class sizes differ between the graphs.
    ClassMismatch,
    /// Connected components cannot be paired by size and certificate.
    ComponentMismatch,
    /// Backtracking covered the whole class-respecting search space.
    ExhaustedSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Maps each vertex of the first graph to its image in the second.
    Isomorphic(Permutation),
    NotIsomorphic(Witness),
    /// Node budget spent before the search finished.
    Inconclusive,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Backtracking nodes visited.
    pub nodes: u64,
    /// Number of distinct vertex classes after refinement.
    pub classes: usize,
    /// Wall time; not serialized, so output stays reproducible.
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoResult {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self.verdict, Verdict::Isomorphic(_))
    }
}

/// `{"verdict", "permutation", "witness", "stats": {"nodes", "classes"}}`.
impl Serialize for IsoResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (tag, perm, witness) = match &self.verdict {
            Verdict::Isomorphic(p) => ("isomorphic", Some(p.as_slice()), None),
            Verdict::NotIsomorphic(w) => ("not_isomorphic", None, Some(w)),
            Verdict::Inconclusive => ("inconclusive", None, None),
        };
        #[derive(Serialize)]
        struct Stats {
            nodes: u64,
            classes: usize,
        }
        let mut st = s.serialize_struct("IsoResult", 4)?;
        st.serialize_field("verdict", tag)?;
        st.serialize_field("permutation", &perm)?;
        st.serialize_field("witness", &witness)?;
        st.serialize_field(
            "stats",
            &Stats {
                nodes: self.stats.nodes,
                classes: self.stats.classes,
            },
        )?;
        st.end()
    }
}

/// True iff `p` carries every edge of `g1` onto an edge of `g2` and vice
/// versa, i.e. `g2.adj[p(i)][p(j)] == g1.adj[i][j]` for all `i, j`.
pub fn verify_isomorphism(g1: &Graph, g2: &Graph, p: &Permutation) -> Result<bool> {
    if g1.n() != g2.n() {
        return Err(Error::SizeMismatch {
            expected: g1.n(),
            actual: g2.n(),
        });
    }
    if p.len() != g1.n() {
        return Err(Error::SizeMismatch {
            expected: g1.n(),
            actual: p.len(),
        });
    }
    Ok(g1.edge_count() == g2.edge_count()
        && g1.edges().all(|(i, j)| g2.has_edge(p.apply(i), p.apply(j))))
}
