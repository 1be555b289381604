use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("vertex {index} out of range for graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("need powers up to {required}, table only has {available}")]
    InsufficientPowers { required: usize, available: usize },
    #[error("inexact division at step {step}: input is not a valid trace sequence")]
    InexactDivision { step: usize },
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("graph too large for exhaustive search: n = {n}, limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
