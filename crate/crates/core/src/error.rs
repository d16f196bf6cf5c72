use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be positive")]
    ZeroSize,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid variable order: {0}")]
    InvalidOrder(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("partition ({0}) has a single row; its Specht ideal is the unit ideal")]
    SingleRow(String),
    #[error("hat is undefined for ({0}): the first part must be at least 2")]
    HatUndefined(String),
    #[error("tableau is not column standard with respect to the given order")]
    NotColumnStandard,
    #[error("{0} and {1} are not in the same column")]
    NotSameColumn(usize, usize),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("empty input")]
    EmptyInput,
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    CapacityExceeded { n: usize, limit: usize },
    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { n: usize, k: usize },
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
