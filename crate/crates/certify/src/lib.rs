//! Certification runs over the 84 cubics, the sextic model and the lattice search, collected into
//! one JSON report.

pub mod checks;
pub mod config;
pub mod error;
pub mod report;
pub mod suites;

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use algebra_core::{
    jacobian, minor_determinant, PolyRing, PrimeField, QuadExtField, SparsePolynomial,
};
use fpp_dataset::{
    expand_equations, minor_selections, serialize_equations, sha256_hex, u_ring, GroupActionSpec,
};
use rayon::prelude::*;
use serde_json::json;

pub use checks::{expected_numerator, Outcome};
pub use config::{Budget, CertConfig, CheckId};
pub use error::{CertifyError, Result};
pub use report::{CertReport, CheckRecord, RunMeta, Status};

type P = SparsePolynomial<PrimeField>;

/// Data shared by all checks of one run.
pub struct Context {
    pub config: CertConfig,
    pub field: PrimeField,
    pub ring: Arc<PolyRing<PrimeField>>,
    pub action: GroupActionSpec,
    /// The 84 cubics over GF(p).
    pub equations: Vec<P>,
    minors: OnceLock<std::result::Result<Vec<P>, String>>,
}

impl Context {
    pub fn new(config: CertConfig) -> Result<Self> {
        let field = config.validate()?;
        let ring = u_ring(field);
        let action = GroupActionSpec::default();
        let equations = expand_equations(&ring, &action, config.conjugate)?;
        Ok(Self {
            config,
            field,
            ring,
            action,
            equations,
            minors: OnceLock::new(),
        })
    }

    /// The three 7×7 Jacobian minors, computed once.
    pub fn minors(&self) -> Result<&[P]> {
        let m = self.minors.get_or_init(|| {
            let jac = jacobian(&self.equations).map_err(|e| e.to_string())?;
            minor_selections()
                .par_iter()
                .map(|s| {
                    minor_determinant(&jac, &s.zero_based_rows(), &s.cols)
                        .map_err(|e| e.to_string())
                })
                .collect()
        });
        m.as_deref()
            .map_err(|e| CertifyError::Config(format!("minor computation failed: {e}")))
    }

    /// SHA-256 of the canonical lines of the 84 cubics over ℚ(ω).
    pub fn dataset_sha256(&self) -> Result<String> {
        let exact = expand_equations(&u_ring(QuadExtField), &self.action, self.config.conjugate)?;
        Ok(sha256_hex(serialize_equations(&exact).as_bytes()))
    }

    pub fn meta(&self) -> Result<RunMeta> {
        Ok(RunMeta {
            prime: self.field.modulus(),
            sqrt_minus7: u64::from(self.field.sqrt_minus7()),
            seed: self.config.seed,
            samples: self.config.samples,
            conjugate: self.config.conjugate,
            dataset_sha256: self.dataset_sha256()?,
            toolkit_version: env!("CARGO_PKG_VERSION").into(),
        })
    }
}

fn evaluate(id: CheckId, ctx: &Context) -> Result<Outcome> {
    match id {
        CheckId::HilbertSeries => checks::check_hilbert_series(ctx),
        CheckId::GroupInvariance => checks::check_group_invariance(ctx),
        CheckId::FixedPoints => checks::check_fixed_points(ctx),
        CheckId::Smoothness => checks::check_smoothness(ctx),
        CheckId::CurveC => checks::check_curve_c(ctx),
        CheckId::PrimeIndependence => checks::check_prime_independence(ctx),
        CheckId::SexticSymbolic => suites::check_sextic_symbolic(ctx),
        CheckId::Automorphism => suites::check_automorphism(ctx),
        CheckId::ZTransport => suites::check_z_transport(ctx),
        CheckId::Embedding => suites::check_embedding(ctx),
        CheckId::Lattice => suites::check_lattice(ctx),
    }
}

/// Runs one check; a budget overrun becomes a skip and any other error a failure.
pub fn run_check(id: CheckId, ctx: &Context) -> CheckRecord {
    let start = Instant::now();
    let outcome = evaluate(id, ctx).unwrap_or_else(|e| Outcome {
        status: if e.is_budget() {
            Status::budget()
        } else {
            Status::Fail
        },
        observed: json!({ "error": e.to_string() }),
        expected: json!(null),
    });
    CheckRecord {
        id: id.as_str().into(),
        status: outcome.status,
        observed: outcome.observed,
        expected: outcome.expected,
        ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs the configured checks in parallel; records keep the configured order.
pub fn run_all(config: &CertConfig) -> Result<CertReport> {
    let ctx = Context::new(config.clone())?;
    let meta = ctx.meta()?;
    let records = config
        .checks
        .par_iter()
        .map(|&id| run_check(id, &ctx))
        .collect();
    Ok(CertReport::new(meta, records))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(checks: &[CheckId]) -> CertConfig {
        CertConfig {
            checks: checks.to_vec(),
            samples: 20,
            ..Default::default()
        }
    }

    #[test]
    fn hilbert_series_passes() {
        let ctx = Context::new(config(&[CheckId::HilbertSeries])).unwrap();
        let r = run_check(CheckId::HilbertSeries, &ctx);
        assert_eq!(r.status, Status::Pass, "{}", r.observed);
        assert_eq!(r.observed["hilbert_polynomial"], "18k^2-9k+1");
    }

    #[test]
    fn minors_guard_one_fixed_point_each() {
        let ctx = Context::new(config(&[CheckId::FixedPoints])).unwrap();
        let r = run_check(CheckId::FixedPoints, &ctx);
        assert_eq!(r.status, Status::Pass, "{}", r.observed);
        let v = &r.observed["minor_values"];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(v[i][j] != 0, i == j);
            }
        }
    }

    #[test]
    fn equations_are_weight_homogeneous_but_not_weight_zero() {
        let ctx = Context::new(config(&[CheckId::GroupInvariance])).unwrap();
        let r = run_check(CheckId::GroupInvariance, &ctx);
        assert_eq!(r.observed["each_equation_weight_homogeneous"], true);
        assert_eq!(r.observed["all_monomials_weight_zero"], false);
        assert_eq!(r.observed["span_rank_with_g3_images"], 84);
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn budget_overrun_is_a_skip() {
        let mut c = config(&[CheckId::CurveC]);
        c.budget.max_pairs = Some(1);
        let report = run_all(&c).unwrap();
        assert_eq!(report.checks[0].status, Status::budget());
        assert!(report.passed());
    }

    #[test]
    fn reports_are_deterministic() {
        let c = config(&[
            CheckId::HilbertSeries,
            CheckId::Automorphism,
            CheckId::Embedding,
            CheckId::CurveC,
        ]);
        let a = run_all(&c).unwrap().without_timings();
        let b = run_all(&c).unwrap().without_timings();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(
            a.checks.iter().map(|r| r.id.as_str()).collect::<Vec<_>>(),
            ["hilbert_series", "automorphism", "embedding", "curve_C"]
        );
        assert!(a.record("embedding").unwrap().status.is_skip());
    }
}
