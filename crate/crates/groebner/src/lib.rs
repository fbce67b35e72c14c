//! Gröbner bases over prime fields: a packed-term Buchberger engine with Gebauer–Möller pair
//! elimination and sugar selection, normal forms, ideal operations and submodule bases.

pub mod basis;
pub mod engine;
pub mod error;
pub mod ideal;

pub use basis::{
    buchberger, buchberger_with, module_groebner, normal_form, BuchbergerOptions, GroebnerBasis,
    ModuleBasis, ModuleVector,
};
pub use engine::EngineStats;
pub use error::{GroebnerError, Result};
pub use ideal::{ideal_product, ideal_sum, IdealHandle};
