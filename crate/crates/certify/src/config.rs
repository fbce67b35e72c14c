use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use algebra_core::PrimeField;
use groebner::BuchbergerOptions;

use crate::error::{CertifyError, Result};

/// Identifier of one check record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    HilbertSeries,
    GroupInvariance,
    FixedPoints,
    Smoothness,
    CurveC,
    PrimeIndependence,
    SexticSymbolic,
    Automorphism,
    ZTransport,
    Embedding,
    Lattice,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::HilbertSeries,
        CheckId::GroupInvariance,
        CheckId::FixedPoints,
        CheckId::Smoothness,
        CheckId::CurveC,
        CheckId::PrimeIndependence,
        CheckId::SexticSymbolic,
        CheckId::Automorphism,
        CheckId::ZTransport,
        CheckId::Embedding,
        CheckId::Lattice,
    ];

    /// The checks on the ideal of the 84 cubics.
    pub const IDEAL: [CheckId; 6] = [
        CheckId::HilbertSeries,
        CheckId::GroupInvariance,
        CheckId::FixedPoints,
        CheckId::Smoothness,
        CheckId::CurveC,
        CheckId::PrimeIndependence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::HilbertSeries => "hilbert_series",
            CheckId::GroupInvariance => "group_invariance",
            CheckId::FixedPoints => "fixed_points",
            CheckId::Smoothness => "smoothness",
            CheckId::CurveC => "curve_C",
            CheckId::PrimeIndependence => "prime_independence",
            CheckId::SexticSymbolic => "sextic_symbolic",
            CheckId::Automorphism => "automorphism",
            CheckId::ZTransport => "z_transport",
            CheckId::Embedding => "embedding",
            CheckId::Lattice => "lattice",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = CertifyError;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| CertifyError::Config(format!("unknown check {s}")))
    }
}

/// Limits for every Gröbner basis run; exceeding one turns the check into "skip: budget".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn options(&self) -> BuchbergerOptions {
        BuchbergerOptions {
            max_pairs: self.max_pairs,
            time_limit: self.time_limit,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertConfig {
    pub prime: u64,
    /// Residue with r² ≡ −7; the smallest one when `None`.
    pub sqrt_minus7: Option<u64>,
    pub seed: u64,
    pub samples: usize,
    /// Apply ω ↦ −ω to all data.
    pub conjugate: bool,
    pub budget: Budget,
    /// Prime for the prime-independence spot check.
    pub second_prime: u64,
    /// HF(k) is compared with the standard-monomial count up to this degree.
    pub oracle_degree: u32,
    /// The degree-k components of the ideal are rebuilt by linear algebra up to this degree.
    pub macaulay_degree: u32,
    pub checks: Vec<CheckId>,
    /// Scalings for the exploratory embedding check; skipped when absent.
    pub embedding_scalings: Option<[u32; 10]>,
}

impl Default for CertConfig {
    fn default() -> Self {
        Self {
            prime: 263,
            sqrt_minus7: Some(16),
            seed: 42,
            samples: 100,
            conjugate: false,
            budget: Budget {
                max_pairs: None,
                time_limit: Some(Duration::from_secs(3600)),
            },
            second_prime: 337,
            oracle_degree: 8,
            macaulay_degree: 4,
            checks: CheckId::ALL.to_vec(),
            embedding_scalings: None,
        }
    }
}

impl CertConfig {
    /// GF(p) with the configured or smallest square root of −7.
    pub fn field(&self) -> Result<PrimeField> {
        let f = match self.sqrt_minus7 {
            Some(r) => PrimeField::new(self.prime, r),
            None => PrimeField::with_smallest_root(self.prime),
        };
        f.map_err(|e| CertifyError::Config(e.to_string()))
    }

    pub fn second_field(&self) -> Result<PrimeField> {
        PrimeField::with_smallest_root(self.second_prime)
            .map_err(|e| CertifyError::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<PrimeField> {
        if self.samples == 0 {
            return Err(CertifyError::Config(
                "at least one sample is required".into(),
            ));
        }
        if self.checks.is_empty() {
            return Err(CertifyError::Config("no checks selected".into()));
        }
        if self.macaulay_degree < 3 {
            return Err(CertifyError::Config(
                "the Macaulay comparison starts in degree 3".into(),
            ));
        }
        if self.checks.contains(&CheckId::PrimeIndependence) {
            self.second_field()?;
        }
        self.field()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p5_is_a_configuration_error() {
        let c = CertConfig {
            prime: 5,
            sqrt_minus7: None,
            ..Default::default()
        };
        assert!(matches!(c.validate(), Err(CertifyError::Config(_))));
    }

    #[test]
    fn wrong_root_rejected() {
        let c = CertConfig {
            sqrt_minus7: Some(17),
            ..Default::default()
        };
        assert!(matches!(c.validate(), Err(CertifyError::Config(_))));
    }

    #[test]
    fn auto_root() {
        let c = CertConfig {
            sqrt_minus7: None,
            ..Default::default()
        };
        assert_eq!(c.validate().unwrap().sqrt_minus7(), 16);
        assert_eq!(c.second_field().unwrap().sqrt_minus7(), 88);
    }

    #[test]
    fn check_names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.as_str().parse::<CheckId>().unwrap(), c);
        }
        assert!("nope".parse::<CheckId>().is_err());
    }
}
