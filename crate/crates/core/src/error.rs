use thiserror::Error;

/// Errors produced by the configuration-space routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point count mismatch: expected {expected}, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("stacking strategy failed: {0}")]
    Strategy(String),
    #[error("malformed path: {0}")]
    Structural(String),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("not covered: {0}")]
    Uncovered(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
