use thiserror::Error;

/// Errors surfaced by constructors and operations with preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("method disagreement: {0}")]
    MethodDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
