//! Per-vertex closed-walk invariants.
//!
//! The basic table holds `d[k][i] = (A^k)_ii`, the number of closed walks of
//! length `k` at vertex `i`. Sorting the per-vertex vectors gives a
//! certificate that isomorphic graphs must share. The extended profile keeps
//! the off-diagonal walk counts as well, and neighbor-sum refinement folds in
//! the invariants of each vertex's neighborhood.

mod certificate;
mod profile;
mod refine;
mod table;

pub use certificate::{
    certificate, compare_certificates, Certificate, CertificateComparison, Difference,
};
pub use profile::{extended_profile, ExtendedProfile, VertexProfile};
pub use refine::neighbor_sum_refinement;
pub use table::{
    walk_diagonal_table, walk_diagonal_table_mod, InvariantTable, ModularTable, DEFAULT_MODULUS,
};
