use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: index {index} out of range 1..={n}")]
    IndexOutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: diagonal entry ({index},{index}) is not allowed")]
    DiagonalEntry { line: usize, index: usize },
    #[error("conflicting values for pair ({i},{j})")]
    ConflictingEntry { i: usize, j: usize },
    #[error("no value for pair ({i},{j}) and no default given")]
    MissingEntry { i: usize, j: usize },
    #[error("need at least {min} elements, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("index {index} is not in 0..{n}")]
    BadIndex { index: usize, n: usize },
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("order has {order} elements but the matrix has {n}")]
    OrderMismatch { order: usize, n: usize },
    #[error("walk must have at least one step")]
    EmptyWalk,
    #[error("walk is not a cycle")]
    NotACycle,
    #[error("walk family is empty")]
    EmptyFamily,
    #[error("negative weight on edge ({i},{j})")]
    NegativeWeight { i: usize, j: usize },
    #[error("negative distance at ({i},{j})")]
    NegativeDistance { i: usize, j: usize },
    #[error("pair ({a},{b}) does not realize the minimum off-diagonal value")]
    PairNotMinimal { a: usize, b: usize },
    #[error("size {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
