//! Monic quadratic relations for ŷ4 = y0³/y1 and ŷ5 = h0·y1/y0 modulo f.

use algebra_core::{Field, Monomial, QuadExtField, QuadExtScalar};
use serde::Serialize;

use crate::error::{Result, SexticError};
use crate::identities::{ExactModel, QPoly};
use crate::SuiteReport;

/// ŷ = num/den with ŷ² + a·ŷ + b = 0 on f = 0, certified by num² + a·num·den + b·den² = f/c.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticRelation {
    pub num: QPoly,
    pub den: QPoly,
    pub a: QPoly,
    pub b: QPoly,
    pub scale: QuadExtScalar,
}

impl QuadraticRelation {
    /// num² + a·num·den + b·den² − f/scale.
    pub fn residual(&self, f: &QPoly) -> QPoly {
        let lhs = &(&(&self.num * &self.num) + &(&(&self.a * &self.num) * &self.den))
            + &(&self.b * &(&self.den * &self.den));
        let inv = QuadExtField.inv(&self.scale).expect("nonzero scale");
        &lhs - &f.scale(&inv)
    }

    /// Degree of num minus degree of den.
    pub fn grading(&self) -> i64 {
        self.num.total_degree().unwrap_or(0) as i64 - self.den.total_degree().unwrap_or(0) as i64
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralEquations {
    pub y4: QuadraticRelation,
    pub y5: QuadraticRelation,
}

#[derive(Serialize)]
struct Summary {
    a: String,
    b: String,
}

/// Coefficient of v^k in p, as a polynomial free of v.
fn stratum(p: &QPoly, v: usize, k: u16) -> QPoly {
    let terms = p
        .terms()
        .iter()
        .filter(|(m, _)| m.exponent(v) == k)
        .map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e[v] = 0;
            (Monomial::new(e), c.clone())
        })
        .collect();
    QPoly::from_terms(p.ring(), terms)
}

/// Solves num² + a·num·den + b·den² = f/c by stratifying f in the variable `v`, where den = v.
fn solve(m: &ExactModel, num: QPoly, v: usize) -> Result<QuadraticRelation> {
    let f = &m.data.f;
    let den = m.y(v);
    let sq = &num * &num;
    let s0 = stratum(f, v, 0);
    let scale = match s0.div_exact(&sq).map(|q| q.terms().to_vec()).as_deref() {
        Some([(mono, c)]) if mono.is_one() => c.clone(),
        _ => {
            return Err(SexticError::ExtractionFailed(format!(
                "y{v}-free part of f is not a multiple of the square"
            )))
        }
    };
    let inv = QuadExtField.inv(&scale).expect("nonzero");
    let a = stratum(f, v, 1)
        .scale(&inv)
        .div_exact(&num)
        .ok_or_else(|| {
            SexticError::ExtractionFailed(format!(
                "y{v}-linear part of f is not divisible by the numerator"
            ))
        })?;
    let top = f.degree_in(v);
    let b = (2..=top)
        .map(|k| &stratum(f, v, k) * &den.pow(u32::from(k) - 2))
        .fold(QPoly::zero(f.ring()), |acc, t| &acc + &t)
        .scale(&inv);
    let rel = QuadraticRelation {
        num,
        den,
        a,
        b,
        scale,
    };
    if !rel.residual(f).is_zero() {
        return Err(SexticError::ExtractionFailed(
            "cleared identity is not f/c".into(),
        ));
    }
    Ok(rel)
}

pub fn integral_equations(m: &ExactModel) -> Result<IntegralEquations> {
    let y4 = solve(m, m.y(0).pow(3), 1)?;
    let y5 = solve(m, &m.data.h0 * &m.y(1), 0)?;
    Ok(IntegralEquations { y4, y5 })
}

/// +1 for σ-even, −1 for σ-odd, 0 otherwise.
fn sigma_parity(m: &ExactModel, p: &QPoly) -> Result<i8> {
    let s = m.sigma(p)?;
    Ok(if s == *p {
        1
    } else if s == -p {
        -1
    } else {
        0
    })
}

/// Derives a, b for ŷ4 and ŷ5, checks the cleared identities, σ-parity and grading.
pub fn derive_integral_equations(m: &ExactModel) -> Result<(IntegralEquations, SuiteReport)> {
    let eq = integral_equations(m)?;
    let mut r = SuiteReport::default();
    for (name, rel) in [("y4", &eq.y4), ("y5", &eq.y5)] {
        let summary = Summary {
            a: rel.a.to_canonical(),
            b: rel.b.to_canonical(),
        };
        r.push(
            format!("{name}_cleared_identity"),
            rel.residual(&m.data.f).is_zero(),
            serde_json::to_string(&summary).expect("strings"),
        );
        let parity = sigma_parity(m, &rel.num)? * sigma_parity(m, &rel.den)?;
        r.push(
            format!("{name}_sigma_odd"),
            parity == -1,
            format!("parity {parity}"),
        );
        r.push(
            format!("{name}_grading"),
            rel.grading() == 2,
            format!("grading {}", rel.grading()),
        );
    }
    let y = |i| m.y(i);
    let expected_a4 = (&(&y(0) * &y(3)).scale(&m.scalar((-14, 1), (-22, 1)))
        + &(&y(2) * &y(3)).scale(&m.scalar((21, 1), (-31, 1))))
        .scale(&QuadExtScalar::from_fracs((1, 28), (0, 1)));
    r.push(
        "y4_linear_coefficient",
        eq.y4.a == expected_a4,
        eq.y4.a.to_canonical(),
    );
    Ok((eq, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_close() {
        let m = ExactModel::load(false).unwrap();
        let (eq, r) = derive_integral_equations(&m).unwrap();
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        assert_eq!(eq.y4.scale, QuadExtScalar::from_ints(28, 0));
        assert_eq!(eq.y5.scale, QuadExtScalar::from_ints(14, 2));
        assert_eq!(
            eq.y5.a,
            (&m.y(1) * &m.y(2))
                .scale(&(QuadExtScalar::from_ints(42, 2) / QuadExtScalar::from_ints(14, 2)))
        );
    }

    #[test]
    fn stratum_extracts_coefficients() {
        let m = ExactModel::load(false).unwrap();
        let s = stratum(&m.data.f, 1, 0);
        assert_eq!(s, m.y(0).pow(6).scale(&QuadExtScalar::from_ints(28, 0)));
    }
}
