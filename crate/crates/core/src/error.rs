use thiserror::Error;

/// Errors raised by the classification library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("modulus {from} does not divide {to}")]
    ModulusMismatch { from: u64, to: u64 },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("q = p = {0} is not allowed")]
    SamePrime(u64),
    #[error("hensel precondition violated: {0}")]
    Hensel(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("malformed label token `{0}`")]
    MalformedToken(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("degree {0} is not supported: {1}")]
    Unsupported(u64, String),
    #[error("budget of {budget} exceeded during {what}")]
    BudgetExceeded { budget: usize, what: String },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
