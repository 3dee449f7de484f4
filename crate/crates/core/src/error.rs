use thiserror::Error;

/// Errors raised by the library. Check failures inside verification suites
/// are reported as data (see [`crate::report`]), not through this type.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("node index {index} out of range for rank {rank}")]
    NodeOutOfRange { index: usize, rank: usize },
    #[error("node set is not a subset of the ambient nodes: {0}")]
    NotSubset(String),
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("elements belong to different Weyl groups")]
    AmbientMismatch,
    #[error("order precondition violated: {0}")]
    NotComparable(String),
    #[error("malformed poset: {0}")]
    MalformedPoset(String),
    #[error("poset has no {0} element")]
    MissingBound(&'static str),
    #[error("poset is not pure: maximal chains of lengths {0} and {1}")]
    NotPure(usize, usize),
    #[error("matrix dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not in {0}")]
    NotInSubgroup(String),
    #[error("factorization failed: {0}")]
    FactorizationFailed(String),
    #[error("flag point is outside the chart of {0}")]
    OutsideChart(String),
    #[error("flag point is not in cell {expected}, found {found}")]
    WrongCell { expected: String, found: String },
    #[error("wrong parameter count: expected {expected}, got {got}")]
    ParameterCount { expected: usize, got: usize },
    #[error("parameters must be nonzero positive rationals")]
    NonPositiveParameter,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
