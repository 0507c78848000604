use thiserror::Error;

/// Errors shared by every module of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no initial term")]
    ZeroInitialTerm,
    #[error("unit ideal")]
    UnitIdeal,
    #[error("empty block")]
    EmptyBlock,
    #[error("prime does not contain initial ideal")]
    PrimeMissesInitial,
    #[error("partition degenerate, choose another prime")]
    DegeneratePartition,
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("retries exhausted after {attempts} attempts: {context}")]
    RetriesExhausted { attempts: u32, context: String },
    #[error("degenerate point configuration")]
    DegeneratePoints,
    #[error("no subset escapes the minimal primes (F contained in a minimal prime)")]
    NoEscapingSubset,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("mixed ideal: minimal primes of unequal codimension")]
    MixedIdeal,
    #[error("zero form")]
    ZeroForm,
    #[error("dimension too small: {0}")]
    DimensionTooSmall(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
