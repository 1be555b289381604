//! Rebuilding the adjacency matrix from its diagonal walk table.
//!
//! Writing `A = U Λ U^T` with orthonormal eigenvector columns `u_j`,
//! `(A^k)_ii = Σ_j λ_j^k U_ij^2`. The traces give the characteristic
//! polynomial and hence `λ`; for distinct eigenvalues each vertex's column of
//! walk counts is a Vandermonde system for the squares `U_ij^2`. What is left
//! is choosing signs so that `U` is orthogonal and `U Λ U^T` is a 0/1 matrix.
//! Repeated eigenvalues and ambiguous sign patterns are reported, not solved.

mod pipeline;
mod signs;
mod spectrum;
mod vandermonde;

pub use pipeline::reconstruct_adjacency;
pub use signs::assign_signs;
pub use spectrum::{compute_spectrum, spectrum_from_polynomial, Spectrum};
pub use vandermonde::{solve_dual_vandermonde, solve_v_squares, VSquares};

use serde::{Serialize, Serializer};

use crate::graph::{write_graph6, Graph};
use crate::scalar::Real;

/// Numerical thresholds used by the reconstruction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Eigenvalues closer than `gap * max(1, max |λ|)` count as repeated.
    pub gap: f64,
    /// Negative squared entries above `-clamp` are set to zero.
    pub clamp: f64,
    /// Largest accepted relative residual of the surplus walk equations.
    pub residual: f64,
    /// Squared entries at or below this are treated as exact zeros.
    pub zero_entry: f64,
    /// Largest accepted deviation of `U^T U` from the identity.
    pub orthogonality: f64,
    /// Largest accepted distance of a rebuilt entry from 0 or 1.
    pub rounding: f64,
    /// Node limit for the sign search.
    pub sign_budget: u64,
    /// Stop collecting alternatives once this many distinct graphs are found.
    pub max_alternatives: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            gap: 1e-8,
            clamp: 1e-8,
            residual: 1e-6,
            zero_entry: 1e-10,
            orthogonality: 1e-6,
            rounding: 0.1,
            sign_budget: 2_000_000,
            max_alternatives: 16,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReconstructionStatus {
    Success,
    NonGenericSpectrum,
    SignAmbiguity,
    Failure,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Residuals {
    /// Largest relative residual over the surplus Vandermonde equations.
    pub vandermonde: Option<f64>,
    /// `max |(U^T U - I)_ij|` of the accepted sign assignment.
    pub orthogonality: Option<f64>,
    /// Largest distance of a rebuilt entry from its rounded value.
    pub rounding: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReconstructionResult<T> {
    pub status: ReconstructionStatus,
    /// Eigenvalues, descending, when they could be computed.
    pub eigenvalues: Vec<T>,
    /// Consecutive eigenvalue gaps.
    pub gaps: Vec<T>,
    /// `vsq[i][j] = U_ij^2`, the weight of vertex `i` on eigenvector `j`.
    pub vsq: Option<Vec<Vec<T>>>,
    /// Signed eigenvector matrix on success.
    pub v: Option<Vec<Vec<T>>>,
    #[serde(serialize_with = "graph6_opt")]
    pub adj: Option<Graph>,
    /// Distinct adjacency matrices found when the signs are ambiguous.
    #[serde(serialize_with = "graph6_vec")]
    pub alternatives: Vec<Graph>,
    pub residuals: Residuals,
    pub note: Option<String>,
}

impl<T: Real> ReconstructionResult<T> {
    pub(crate) fn failed(status: ReconstructionStatus, note: impl Into<String>) -> Self {
        ReconstructionResult {
            status,
            eigenvalues: Vec::new(),
            gaps: Vec::new(),
            vsq: None,
            v: None,
            adj: None,
            alternatives: Vec::new(),
            residuals: Residuals::default(),
            note: Some(note.into()),
        }
    }

    pub(crate) fn with_spectrum(mut self, spec: &Spectrum<T>) -> Self {
        self.eigenvalues = spec.eigenvalues().to_vec();
        self.gaps = spec.gaps().to_vec();
        self
    }

    pub fn is_success(&self) -> bool {
        self.status == ReconstructionStatus::Success
    }
}

fn graph6_opt<S: Serializer>(g: &Option<Graph>, s: S) -> Result<S::Ok, S::Error> {
    g.as_ref().map(write_graph6).serialize(s)
}

fn graph6_vec<S: Serializer>(g: &[Graph], s: S) -> Result<S::Ok, S::Error> {
    g.iter().map(write_graph6).collect::<Vec<_>>().serialize(s)
}
