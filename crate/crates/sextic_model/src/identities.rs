//! Exact polynomial identities of the sextic f over ℚ(ω).

use std::sync::Arc;

use algebra_core::{
    kernel_and_rank, ExactMatrix, Field, PolyRing, QuadExtField, QuadExtScalar, SparsePolynomial,
};
use fpp_dataset::{y_ring, SexticData};
use groebner::{buchberger_with, BuchbergerOptions};

use crate::error::Result;
use crate::SuiteReport;

pub type QPoly = SparsePolynomial<QuadExtField>;

/// The sextic model over ℚ(ω), optionally complex-conjugated.
#[derive(Clone, Debug)]
pub struct ExactModel {
    pub data: SexticData<QuadExtField>,
    pub ring: Arc<PolyRing<QuadExtField>>,
    pub conjugate: bool,
}

impl ExactModel {
    pub fn load(conjugate: bool) -> Result<Self> {
        Ok(Self {
            data: SexticData::load(QuadExtField, conjugate)?,
            ring: y_ring(QuadExtField),
            conjugate,
        })
    }

    pub fn y(&self, i: usize) -> QPoly {
        QPoly::var(&self.ring, i)
    }

    /// a + bω, conjugated along with the data.
    pub fn scalar(&self, re: (i64, i64), im: (i64, i64)) -> QuadExtScalar {
        let s = QuadExtScalar::from_fracs(re, im);
        if self.conjugate {
            s.conj()
        } else {
            s
        }
    }

    pub fn constant(&self, s: QuadExtScalar) -> QPoly {
        QPoly::constant(&self.ring, s)
    }

    /// σ: (y0 : y1 : y2 : y3) ↦ (y0 : −y1 : y2 : −y3).
    pub fn sigma(&self, p: &QPoly) -> Result<QPoly> {
        Ok(p.substitute(&[self.y(0), -self.y(1), self.y(2), -self.y(3)])?)
    }

    pub fn f_cones(&self) -> QPoly {
        &self.data.cone1 * &self.data.cone2
    }

    /// The conic of the image of A1' with y0 replaced by y1.
    pub fn conic_q(&self) -> Result<QPoly> {
        Ok(self
            .data
            .conic_a1p
            .substitute(&[self.y(1), self.y(1), self.y(2), self.y(3)])?)
    }
}

fn restrict(p: &QPoly, fixed: &[(usize, QuadExtScalar)]) -> Result<QPoly> {
    let ring = p.ring();
    let images: Vec<QPoly> = (0..ring.nvars())
        .map(|i| match fixed.iter().find(|(j, _)| *j == i) {
            Some((_, c)) => QPoly::constant(ring, c.clone()),
            None => QPoly::var(ring, i),
        })
        .collect();
    Ok(p.substitute(&images)?)
}

fn constant_value(p: &QPoly) -> Option<QuadExtScalar> {
    match p.terms() {
        [(m, c)] if m.is_one() => Some(c.clone()),
        _ => None,
    }
}

/// σ-invariance, the restrictions to y1 = 0 and y0 = 0, the pencil y0 = a·y1 and the splitting at a = 1.
pub fn verify_polynomial_identities(m: &ExactModel) -> Result<SuiteReport> {
    let f = &m.data.f;
    let mut r = SuiteReport::default();
    let zero = QuadExtScalar::zero();

    r.push(
        "sigma_invariance",
        m.sigma(f)? == *f,
        "f(y0,−y1,y2,−y3) − f",
    );

    let at_y1 = restrict(f, &[(1, zero.clone())])?;
    let y0_6 = m.y(0).pow(6);
    let s28 = at_y1.div_exact(&y0_6).as_ref().and_then(constant_value);
    r.push(
        "restriction_y1_zero",
        s28 == Some(QuadExtScalar::from_ints(28, 0)),
        format!(
            "f(y0,0,y2,y3) = {}·y0^6",
            s28.map_or("non-monomial".into(), |s| s.to_string())
        ),
    );

    let at_y0 = restrict(f, &[(0, zero.clone())])?;
    let h0 = &m.data.h0;
    let y1h0 = &m.y(1) * h0;
    let s14 = at_y0
        .div_exact(&(&y1h0 * &y1h0))
        .as_ref()
        .and_then(constant_value);
    r.push(
        "restriction_y0_zero",
        s14 == Some(m.scalar((14, 1), (2, 1))),
        format!(
            "f(0,y1,y2,y3) = {}·y1^2·h0^2",
            s14.map_or("no such factorization".into(), |s| s.to_string())
        ),
    );

    // the pencil y0 = a·y1 in the ring (a, y1, y2, y3)
    let pr = PolyRing::new(QuadExtField, &["a", "y1", "y2", "y3"]);
    let pv = |i| QPoly::var(&pr, i);
    let fa = f.substitute(&[&pv(0) * &pv(1), pv(1), pv(2), pv(3)])?;
    let ga = fa.div_exact(&pv(1).pow(2));
    r.push(
        "pencil_divisible_by_y1_squared",
        ga.is_some(),
        "f(a·y1,y1,y2,y3) = y1^2·g_a",
    );
    let Some(ga) = ga else { return Ok(r) };

    let ar = PolyRing::new(QuadExtField, &["a"]);
    let mut nodes_ok = true;
    for y2 in [-1i64, 1] {
        let pt = [
            QPoly::var(&ar, 0),
            QPoly::zero(&ar),
            QPoly::constant(&ar, y2.into()),
            QPoly::constant(&ar, 1.into()),
        ];
        for p in [
            ga.clone(),
            ga.derivative(1),
            ga.derivative(2),
            ga.derivative(3),
        ] {
            nodes_ok &= p.substitute(&pt)?.is_zero();
        }
    }
    r.push(
        "pencil_nodes",
        nodes_ok,
        "g_a and ∂g_a/∂y1,y2,y3 vanish at (0,∓1,1) for all a",
    );

    let g1 = ga.substitute(&[m.constant(QuadExtScalar::one()), m.y(1), m.y(2), m.y(3)])?;
    let lines = &(&m.y(2) + &m.y(3)) * &(&m.y(2) - &m.y(3));
    let cof = g1
        .div_exact(&(&lines * &m.conic_q()?))
        .as_ref()
        .and_then(constant_value);
    r.push(
        "pencil_a1_splits",
        cof.as_ref().is_some_and(|c| !c.is_zero()),
        format!(
            "g_1 = {}·(y2+y3)(y2−y3)·q",
            cof.map_or("no such factorization".into(), |s| s.to_string())
        ),
    );
    Ok(r)
}

/// f is singular along y0 = y1 = 0 and along y0 = h0 = 0, and has a corank-one point at (1:1:0:0).
pub fn verify_singular_locus(m: &ExactModel) -> Result<SuiteReport> {
    let f = &m.data.f;
    let h0 = &m.data.h0;
    let zero = QuadExtScalar::zero();
    let mut r = SuiteReport::default();
    let partials: Vec<QPoly> = (0..4).map(|i| f.derivative(i)).collect();

    let along_f = std::iter::once(f)
        .chain(&partials)
        .map(|p| restrict(p, &[(0, zero.clone()), (1, zero.clone())]))
        .collect::<Result<Vec<_>>>()?;
    r.push(
        "singular_along_y0_y1",
        along_f.iter().all(QPoly::is_zero),
        "f and ∇f vanish on y0 = y1 = 0",
    );

    let on_y0 = partials
        .iter()
        .map(|p| restrict(p, &[(0, zero.clone())]))
        .collect::<Result<Vec<_>>>()?;
    r.push(
        "singular_along_h0",
        on_y0.iter().all(|p| p.div_exact(h0).is_some()),
        "h0 divides every ∂f/∂yi on y0 = 0",
    );
    let expected = &(&m.y(1).pow(2) * &m.y(2)) * h0;
    let cof = on_y0[0]
        .div_exact(&expected)
        .as_ref()
        .and_then(constant_value);
    r.push(
        "d0_cofactor",
        cof == Some(m.scalar((42, 1), (2, 1))),
        format!(
            "∂f/∂y0 at y0 = 0 is {}·y1^2·y2·h0",
            cof.map_or("not of this form".into(), |s| s.to_string())
        ),
    );

    let p = [1i64, 1, 0, 0].map(QuadExtScalar::from);
    let grad_zero = partials
        .iter()
        .map(|d| d.evaluate(&p))
        .collect::<algebra_core::Result<Vec<_>>>()?;
    r.push(
        "gradient_at_p",
        f.evaluate(&p)?.is_zero() && grad_zero.iter().all(QuadExtScalar::is_zero),
        "f and ∇f vanish at (1:1:0:0)",
    );

    // Hessian of the chart y0 = 1 at (y1,y2,y3) = (1,0,0)
    let chart = f.substitute(&[m.constant(QuadExtScalar::one()), m.y(1), m.y(2), m.y(3)])?;
    let hess = ExactMatrix::from_fn(3, 3, |i, j| {
        chart
            .derivative(i + 1)
            .derivative(j + 1)
            .evaluate(&p)
            .expect("four coordinates")
    });
    let rank = kernel_and_rank(&QuadExtField, &hess).rank;
    r.push("hessian_rank_at_p", rank == 2, format!("rank {rank}"));
    Ok(r)
}

fn in_ideal(f: &QPoly, gens: Vec<QPoly>) -> Result<bool> {
    let opts = BuchbergerOptions {
        allow_characteristic_zero: true,
        ..Default::default()
    };
    let gb = buchberger_with(&gens, algebra_core::MonomialOrder::Grevlex, &opts)?;
    Ok(gb.normal_form(f)?.is_zero())
}

/// The points and parametrized curves and their σ-images lie on f = 0; f_cones is σ-invariant and contains S1', S1''.
pub fn verify_curve_incidence(m: &ExactModel) -> Result<SuiteReport> {
    let f = &m.data.f;
    let d = &m.data;
    let mut r = SuiteReport::default();
    let field = QuadExtField;
    let sig = |p: &[QuadExtScalar]| vec![p[0].clone(), -&p[1], p[2].clone(), -&p[3]];

    let points: Vec<(&str, Vec<QuadExtScalar>)> = vec![
        ("S1", [0i64, 0, -1, 1].map(QuadExtScalar::from).to_vec()),
        ("A1", [1i64, 1, 0, 0].map(QuadExtScalar::from).to_vec()),
        ("C1", d.point_c1.clone()),
        ("B1'", d.point_b1p.clone()),
    ];
    for (name, p) in &points {
        for (tag, q) in [("", p.clone()), ("σ", sig(p))] {
            let v = f.evaluate(&q)?;
            r.push(
                format!("point {tag}{name}"),
                field.is_zero(&v),
                format!("f = {v}"),
            );
        }
    }

    let cone1 = &d.cone1;
    for (name, curve) in [("S1'", &d.s1p), ("S1''", &d.s1pp)] {
        let neg = |p: &QPoly| -p;
        let sig_curve = [
            curve[0].clone(),
            neg(&curve[1]),
            curve[2].clone(),
            neg(&curve[3]),
        ];
        for (tag, c) in [("", curve.clone()), ("σ", sig_curve)] {
            let v = f.substitute(&c)?;
            r.push(
                format!("parametric {tag}{name}"),
                v.is_zero(),
                format!("f∘{tag}{name} = {}", v.to_canonical()),
            );
        }
        let bound = curve
            .iter()
            .filter_map(QPoly::total_degree)
            .max()
            .unwrap_or(0)
            * 6;
        r.push(
            format!("degree bound {name}"),
            bound <= 18,
            format!("deg_t ≤ {bound}"),
        );
        r.push(
            format!("cone contains {name}"),
            cone1.substitute(curve)?.is_zero(),
            "first cubic cone vanishes along the curve",
        );
    }

    let y = |i| m.y(i);
    let q = m.conic_q()?;
    let implicit: Vec<(&str, Vec<QPoly>)> = vec![
        ("F", vec![y(0), y(1)]),
        ("F2", vec![y(0), d.h0.clone()]),
        ("B1", vec![&y(0) - &y(1), &y(2) + &y(3)]),
        ("A1''", vec![&y(0) - &y(1), &y(2) - &y(3)]),
        ("A1'", vec![&y(0) - &y(1), q]),
    ];
    for (name, gens) in implicit {
        let sgens = gens
            .iter()
            .map(|g| m.sigma(g))
            .collect::<Result<Vec<_>>>()?;
        r.push(
            format!("implicit {name}"),
            in_ideal(f, gens)?,
            "f reduces to 0 modulo the curve ideal",
        );
        r.push(
            format!("implicit σ{name}"),
            in_ideal(f, sgens)?,
            "f reduces to 0 modulo the curve ideal",
        );
    }

    let fc = m.f_cones();
    r.push(
        "f_cones_sigma_invariance",
        m.sigma(&fc)? == fc,
        "f_cones(y0,−y1,y2,−y3) − f_cones",
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_suites_pass() {
        let m = ExactModel::load(false).unwrap();
        for r in [
            verify_polynomial_identities(&m),
            verify_singular_locus(&m),
            verify_curve_incidence(&m),
        ] {
            let r = r.unwrap();
            let bad: Vec<_> = r.failures().collect();
            assert!(bad.is_empty(), "{bad:#?}");
        }
    }

    #[test]
    fn conjugate_model_passes() {
        let m = ExactModel::load(true).unwrap();
        assert!(verify_polynomial_identities(&m).unwrap().passed());
        assert!(verify_singular_locus(&m).unwrap().passed());
    }

    #[test]
    fn restriction_scalars() {
        let m = ExactModel::load(false).unwrap();
        let r = verify_polynomial_identities(&m).unwrap();
        let detail = |n: &str| {
            r.findings
                .iter()
                .find(|f| f.name == n)
                .unwrap()
                .detail
                .clone()
        };
        assert!(detail("restriction_y1_zero").starts_with("f(y0,0,y2,y3) = (28/1+0/1*w)"));
        assert!(detail("restriction_y0_zero").contains("(14/1+2/1*w)"));
    }

    #[test]
    fn h0_through_nodes() {
        let m = ExactModel::load(false).unwrap();
        for y2 in [-1i64, 1] {
            let p = [0i64, 0, y2, 1].map(QuadExtScalar::from);
            assert!(m.data.h0.evaluate(&p).unwrap().is_zero());
        }
    }
}
