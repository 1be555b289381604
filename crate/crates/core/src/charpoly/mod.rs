//! Characteristic polynomials of adjacency matrices.
//!
//! Conventions: `p(x) = det(xI - A) = x^n + a_{n-1} x^{n-1} + ... + a_0`,
//! `p_i(x)` is the characteristic polynomial of `A` with row and column `i`
//! removed, and `(A^0)_ii = 1`.

mod berkowitz;
mod deleted;
mod newton;
mod polynomial;
mod roots;

pub use berkowitz::{charpoly_direct, charpoly_of_matrix};
pub use deleted::{
    check_derivative_identity, invariants_from_deleted_charpolys, vertex_deleted_charpolys,
    DeletedCharPolys, RecoveredInvariants,
};
pub use newton::{charpoly_from_traces, power_traces, TraceSequence};
pub use polynomial::Polynomial;
pub use roots::{is_squarefree, real_roots, RootError};
