//! Closed-walk graph invariants.
//!
//! The diagonal of `A^k` counts closed walks of length `k` at each vertex.
//! This crate computes those counts exactly (and modulo a prime), sorts them
//! into isomorphism certificates, derives characteristic and vertex-deleted
//! characteristic polynomials from them, attempts to rebuild the adjacency
//! matrix from the diagonal table through the spectrum, and runs an
//! invariant-seeded backtracking isomorphism search with a brute-force
//! oracle alongside.
//!
//! Numeric code is generic over the scalar type (see [`scalar`]); the
//! aliases below fix the types used throughout the CLI.

pub mod charpoly;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod isomatch;
pub mod matrix;
pub mod reconstruct;
pub mod scalar;

pub use error::{Error, Result};
pub use graph::{Graph, Permutation};

use num_bigint::{BigInt, BigUint};

/// Exact closed-walk table.
pub type WalkTable = invariants::InvariantTable<BigUint>;
/// Certificate over exact walk counts.
pub type WalkCertificate = invariants::Certificate<BigUint>;
/// Exact extended (off-diagonal) profile.
pub type WalkProfile = invariants::ExtendedProfile<BigUint>;
/// Integer polynomial.
pub type IntPolynomial = charpoly::Polynomial<BigInt>;
/// Integer trace sequence.
pub type IntTraces = charpoly::TraceSequence<BigInt>;
/// Integer vertex-deleted characteristic polynomials.
pub type IntDeletedCharPolys = charpoly::DeletedCharPolys<BigInt>;
