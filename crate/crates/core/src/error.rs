use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("box not in diagram: ({row}, {col})")]
    BoxNotInDiagram { row: usize, col: usize },
    #[error("invalid modulus")]
    InvalidModulus,
    #[error("empty modulus set")]
    EmptyModulusSet,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid diagonal hook set")]
    InvalidDiagonalHookSet,
    #[error("invalid hook set")]
    InvalidHookSet,
    #[error("cap undefined for non-coprime pair ({0}, {1})")]
    NonCoprimePair(usize, usize),
    #[error("infinite gap set")]
    InfiniteGapSet,
    #[error("empty generator set")]
    EmptyGenerators,
    #[error("not in phi domain")]
    NotInPhiDomain,
    #[error("phi defined for even parameter")]
    PhiOddParameter,
    #[error("recurrence defined for even lengths")]
    RecurrenceOddLength,
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
