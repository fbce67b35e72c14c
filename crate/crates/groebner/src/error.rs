use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("Gröbner bases over characteristic zero require an explicit opt-in")]
    CoefficientFieldUnsupported,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("empty generator list")]
    EmptyInput,
    #[error("degree cap requires homogeneous input")]
    InhomogeneousTruncation,
    #[error("weighted degree {0} exceeds the packed-term limit of 255")]
    DegreeOverflow(u32),
    #[error("unsupported shape: {0}")]
    Unsupported(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error(transparent)]
    Algebra(#[from] algebra_core::AlgebraError),
}

pub type Result<T> = std::result::Result<T, GroebnerError>;
