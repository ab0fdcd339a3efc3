//! Crate-wide error type.

/// Everything that can go wrong across the crate, from arithmetic
/// preconditions to enumeration caps.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("enumeration cap {0} exceeded")]
    CapExceeded(u64),
    #[error("element is not a member of the group")]
    NotMember,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group has a nontrivial centre")]
    CenterNontrivial,
    #[error("no such table row: {0}")]
    NoSuchRow(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("value not exactly representable: {0}")]
    NonRepresentable(String),
    #[error("coset multiplier incompatible with the group")]
    IncompatibleMultiplier,
    #[error("element kind mismatch: {0}")]
    KindMismatch(String),
    #[error("search found nothing: {0}")]
    NotFound(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
