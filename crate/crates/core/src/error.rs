use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("label {label} is not in the alcove for n={n}, k={k}")]
    OutOfAlcove { label: String, n: usize, k: usize },
    #[error("level mismatch: {0}")]
    LevelMismatch(String),
    #[error("rational function has a pole at the evaluation point")]
    Pole,
    #[error("routes disagree: {0}")]
    RouteMismatch(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
