use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SexticError {
    #[error(transparent)]
    Algebra(#[from] algebra_core::AlgebraError),
    #[error(transparent)]
    Dataset(#[from] fpp_dataset::DatasetError),
    #[error(transparent)]
    Groebner(#[from] groebner::GroebnerError),
    #[error("only {got} of {wanted} admissible points after {draws} draws")]
    InsufficientPoints {
        wanted: usize,
        got: usize,
        draws: usize,
    },
    #[error("seventh roots are not unique modulo {0} (p ≡ 1 mod 7)")]
    SeventhRootUndefined(u64),
    #[error("coefficient extraction failed: {0}")]
    ExtractionFailed(String),
    #[error("all scalings are zero")]
    DegenerateScaling,
}

pub type Result<T> = std::result::Result<T, SexticError>;
