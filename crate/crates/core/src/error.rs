use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("duplicate index {0} in selection")]
    DuplicateIndex(usize),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("operation requires group kind {expected}, got {actual}")]
    WrongKind { expected: String, actual: String },
    #[error("sampling failed: {0}")]
    Sampling(String),
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error("ratio undefined at this point: M0 vanishes")]
    RatioUndefined,
    #[error("matrix does not satisfy the defining equations of {0}")]
    NotInGroup(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
