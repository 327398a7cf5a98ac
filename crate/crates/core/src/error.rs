use thiserror::Error;

/// Errors raised by constructors and decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible domains: k = {left} vs k = {right}")]
    IncompatibleDomains { left: usize, right: usize },
    #[error("domain size {0} unsupported (need 2 <= k <= 255)")]
    DomainSize(usize),
    #[error("element {elem} out of range for k = {k}")]
    Element { elem: usize, k: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("undefined for unary relations")]
    Unary,
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("invalid operation table: {0}")]
    Operation(String),
    #[error("invalid group table: {0}")]
    Group(String),
    #[error("invalid regular family: {0}")]
    Family(String),
    #[error("invalid diagonal spec: {0}")]
    Diagonal(String),
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
