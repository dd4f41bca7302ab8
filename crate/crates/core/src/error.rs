use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("({0:?}) is not a horizontal strip")]
    NotAStrip(String),
    #[error("box ({row},{col}) lies outside the partition")]
    BoxOutside { row: usize, col: usize },
    #[error("partition has more than {0} parts")]
    TooLong(usize),
    #[error("exact division failed: {0}")]
    NotExact(&'static str),
    #[error("pole encountered while specializing: {0}")]
    Pole(&'static str),
    #[error("more than {0} consecutive sample points hit a zero denominator")]
    TooManyResamples(usize),
    #[error("incompatible operands: {0}")]
    Incompatible(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
