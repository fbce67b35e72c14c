//! The sextic double-plane model y0..y3: exact identities over ℚ(ω), integral elements of the
//! normalization, and finite-field sampling of the order-three automorphism and the z-transport law.

pub mod error;
pub mod identities;
pub mod integral;
pub mod roots;
pub mod sampling;

use serde::Serialize;

pub use error::{Result, SexticError};
pub use identities::{
    verify_curve_incidence, verify_polynomial_identities, verify_singular_locus, ExactModel,
};
pub use integral::{derive_integral_equations, IntegralEquations, QuadraticRelation};
pub use sampling::{
    sample_surface_points, to_jsonl, verify_automorphism_order3, verify_embedding_samples,
    verify_z_transport, ChartMaps, EmbeddingAssignment, EmbeddingReport, Generator, SampleOptions,
    SampleStats, SampledPoint, SamplingReport, TransportReport,
};

/// One named assertion and what was observed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Finding {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// A list of findings; passes when all do.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub findings: Vec<Finding>,
}

impl SuiteReport {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.findings.push(Finding::new(name, passed, detail));
    }

    pub fn passed(&self) -> bool {
        self.findings.iter().all(|f| f.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| !f.passed)
    }
}
