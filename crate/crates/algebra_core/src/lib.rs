//! Exact coefficient fields (GF(p) and ℚ(ω) with ω² = −7), sparse multivariate polynomials
//! under grevlex, and dense exact linear algebra.

pub mod error;
pub mod field;
pub mod matrix;
pub mod monomial;
mod parse;
pub mod poly;
pub mod quad;

pub use error::{AlgebraError, Result};
pub use field::{
    reduce_to_prime_field, seventh_root_exponent, Field, PrimeField, QuadExtField, RationalField,
};
pub use matrix::{
    bareiss_determinant, determinant, jacobian, kernel_and_rank, laplace_determinant,
    minor_determinant, row_reduce, ExactMatrix, KernelRank,
};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{sum_all, PolyRing, SparsePolynomial};
pub use quad::QuadExtScalar;
