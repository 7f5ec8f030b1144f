use thiserror::Error;

/// Errors raised by the algebraic operations and document parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,
    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,
    #[error("ideal is not Artinian (no pure power of variable {0})")]
    NotArtinian(String),
    #[error("ideal is not squarefree (generator {0})")]
    NotSquarefree(String),
    #[error("ideal is not Cohen-Macaulay")]
    NotCohenMacaulay,
    #[error("ambient of {count} variables exceeds the cap of {cap}")]
    VariableCap { count: usize, cap: usize },
    #[error("{count} generators exceed the limit of {limit}")]
    TooManyGenerators { count: usize, limit: usize },
    #[error("ideals live in different ambient rings ({0} vs {1} variables)")]
    AmbientMismatch(usize, usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent {0} does not fit the exponent type")]
    ExponentOverflow(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
