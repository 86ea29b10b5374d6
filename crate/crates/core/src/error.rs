use thiserror::Error;

use crate::gaussian::GaussianInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a unit in the residue ring")]
    NotAUnit(GaussianInt),
    #[error("invalid Gaussian prime: {0}")]
    InvalidPrime(String),
    #[error("unsupported modulus shape: {0}")]
    WrongModulusShape(String),
    #[error("multiplicative group is not cyclic; no generator exists")]
    NoGenerator,
    #[error("operands belong to different residue rings")]
    RingMismatch,
    #[error("leading coefficient {0} of the divisor is not a unit")]
    NonUnitLeadingCoefficient(GaussianInt),
    #[error("expected length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("coset leaders {first} and {second} share a syndrome")]
    SyndromeCollision { first: String, second: String },
    #[error("received word is uncorrectable")]
    Uncorrectable,
    #[error("identity violated: {0}")]
    IdentityViolation(String),
    #[error("{0}")]
    TooLarge(String),
    #[error("{0}")]
    Parse(String),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
