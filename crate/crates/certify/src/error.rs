use thiserror::Error;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Algebra(#[from] algebra_core::AlgebraError),
    #[error(transparent)]
    Dataset(#[from] fpp_dataset::DatasetError),
    #[error(transparent)]
    Groebner(#[from] groebner::GroebnerError),
    #[error(transparent)]
    Hilbert(#[from] hilbert::HilbertError),
    #[error(transparent)]
    Sextic(#[from] sextic_model::SexticError),
    #[error(transparent)]
    Lattice(#[from] lattice_search::LatticeError),
}

impl CertifyError {
    /// Whether a Gröbner computation ran out of its S-pair or wall-time budget.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            CertifyError::Groebner(groebner::GroebnerError::BudgetExceeded(_))
                | CertifyError::Sextic(sextic_model::SexticError::Groebner(
                    groebner::GroebnerError::BudgetExceeded(_)
                ))
        )
    }
}

pub type Result<T> = std::result::Result<T, CertifyError>;
