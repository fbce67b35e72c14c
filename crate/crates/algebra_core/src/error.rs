use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("denominator {denominator} is not invertible modulo {modulus}")]
    DenominatorNotInvertible { denominator: String, modulus: u64 },
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("index {0} appears more than once")]
    RepeatedIndex(usize),
    #[error("row and column index sets differ in size ({rows} vs {cols})")]
    NonSquareSelection { rows: usize, cols: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("invalid prime field: {0}")]
    InvalidPrimeField(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
