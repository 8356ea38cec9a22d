use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("division by zero in GF({0})")]
    DivideByZero(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("points are not adjacent (rank of difference is {rank})")]
    NotAdjacent { rank: usize },
    #[error("empty input set")]
    EmptyInput,
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("unsupported girth {0} (expected 6 or 8)")]
    UnsupportedGirth(usize),
    #[error("construction requires characteristic 2, got q = {0}")]
    BadCharacteristic(usize),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("check {0} fails parity on known bits")]
    Inconsistent(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
