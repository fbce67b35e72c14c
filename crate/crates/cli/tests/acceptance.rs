//! Runs `fppcert all` with the reference configuration and prints one PASS/FAIL line per
//! acceptance criterion, then the property floor.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;

use algebra_core::{
    sum_all, Field, Monomial, MonomialOrder, PolyRing, PrimeField, QuadExtField, QuadExtScalar,
    SparsePolynomial,
};
use fpp_dataset::DatasetBundle;
use groebner::{buchberger, normal_form};
use hilbert::{hilbert_function_oracle, hilbert_numerator};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

struct Line {
    id: &'static str,
    pass: bool,
    detail: String,
}

fn line(id: &'static str, pass: bool, detail: impl Into<String>) -> Line {
    Line {
        id,
        pass,
        detail: detail.into(),
    }
}

fn run_reference() -> (Option<i32>, Value) {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance_report.json");
    let out = Command::new(env!("CARGO_BIN_EXE_fppcert"))
        .args([
            "all",
            "--prime",
            "263",
            "--sqrt-minus7",
            "16",
            "--seed",
            "42",
            "--samples",
            "100",
            "--report",
        ])
        .arg(&path)
        .output()
        .expect("fppcert runs");
    let text = std::fs::read_to_string(&path).expect("report written");
    (
        out.status.code(),
        serde_json::from_str(&text).expect("report is JSON"),
    )
}

fn check<'a>(report: &'a Value, id: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == id)
        .unwrap_or_else(|| panic!("no record {id}"))
}

fn passed(report: &Value, id: &str) -> bool {
    check(report, id)["status"] == "pass"
}

fn ms(report: &Value, id: &str) -> u64 {
    check(report, id)["ms"].as_u64().unwrap()
}

fn criteria(report: &Value) -> Vec<Line> {
    let hs = &check(report, "hilbert_series")["observed"];
    let sm = &check(report, "smoothness")["observed"];
    let gi = &check(report, "group_invariance")["observed"];
    let fp = &check(report, "fixed_points")["observed"];
    let cc = &check(report, "curve_C")["observed"];
    let au = &check(report, "automorphism")["observed"];
    let zt = &check(report, "z_transport")["observed"];
    let la = &check(report, "lattice")["observed"];
    let steps: Vec<&Value> = sm["steps"]
        .as_array()
        .map(|s| s.iter().map(|v| &v["hilbert_polynomial"]).collect())
        .unwrap_or_default();
    vec![
        line(
            "1 hilbert series",
            passed(report, "hilbert_series")
                && hs["oracle_hf"] == hs["hf"]
                && ms(report, "hilbert_series") <= 600_000,
            format!(
                "HP {} numerator {} oracle k<=8 {}",
                hs["hilbert_polynomial"],
                hs["numerator"],
                hs["oracle_hf"] == hs["hf"]
            ),
        ),
        line(
            "2 smoothness chain",
            passed(report, "smoothness") && ms(report, "smoothness") <= 3_600_000,
            format!("{steps:?} in {} ms", ms(report, "smoothness")),
        ),
        line(
            "3 (D^2, D.K, chi)",
            (&hs["d_squared"], &hs["d_dot_k"], &hs["chi"]) == (&36.into(), &18.into(), &1.into()),
            format!("({}, {}, {})", hs["d_squared"], hs["d_dot_k"], hs["chi"]),
        ),
        line(
            "4 group action",
            passed(report, "group_invariance"),
            format!(
                "weight 0 {} weight-homogeneous {} rank {} orbit failures {} eq5 {} eq37 {}",
                gi["all_monomials_weight_zero"],
                gi["each_equation_weight_homogeneous"],
                gi["span_rank_with_g3_images"],
                gi["orbit_identity_failures"],
                gi["eq5_is_g3_eq4"],
                gi["eq37_is_g3_eq13"]
            ),
        ),
        line(
            "5 fixed points",
            passed(report, "fixed_points"),
            format!(
                "nonvanishing {} minors {}",
                fp["nonvanishing_equations"], fp["minor_values"]
            ),
        ),
        line(
            "6 curve C",
            passed(report, "curve_C"),
            format!(
                "HP(J+I_C) {} HP(J+U0+I_C^2) {} HP(J+U0) {}",
                cc["hp_jz_plus_ic"], cc["hp_jz_plus_u0_plus_ic_squared"], cc["hp_jz_plus_u0"]
            ),
        ),
        line(
            "7 sextic symbolic suite",
            passed(report, "sextic_symbolic") && ms(report, "sextic_symbolic") <= 60_000,
            format!("{} ms", ms(report, "sextic_symbolic")),
        ),
        line(
            "8 automorphism suite",
            passed(report, "automorphism") && passed(report, "z_transport"),
            format!(
                "rho failures {} transport failures {} along rho^-1 {}",
                au["report"]["failures"],
                zt["stated"]["failures"],
                zt["inverse_orientation"]["failures"]
            ),
        ),
        line(
            "9 lattice search",
            passed(report, "lattice") && ms(report, "lattice") <= 1_000,
            format!(
                "survivors {} ranks {} in {} ms",
                la["survivors"],
                la["survivor_ranks"],
                ms(report, "lattice")
            ),
        ),
    ]
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(
            proptest::test_runner::RngAlgorithm::ChaCha,
        ),
    )
}

fn outcome(
    r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>,
) -> (bool, String) {
    match r {
        Ok(()) => (true, "ok".into()),
        Err(e) => (false, e.to_string()),
    }
}

fn gf() -> PrimeField {
    PrimeField::new(263, 16).unwrap()
}

fn field_axioms() -> (bool, String) {
    let f = gf();
    let q = (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
        .prop_map(|(a, b, c, d)| QuadExtScalar::from_fracs((a, b), (c, d)));
    let a = runner(2_000).run(&(q.clone(), q.clone(), q), |(x, y, z)| {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), QuadExtScalar::one());
        }
        Ok(())
    });
    let b = runner(2_000).run(&(0u32..263, 0u32..263, 0u32..263), |(x, y, z)| {
        prop_assert_eq!(
            f.mul(&f.add(&x, &y), &z),
            f.add(&f.mul(&x, &z), &f.mul(&y, &z))
        );
        if x != 0 {
            prop_assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), 1);
        }
        Ok(())
    });
    let (pa, da) = outcome(a);
    let (pb, db) = outcome(b);
    (pa && pb, format!("Q(w) {da}, GF(263) {db}"))
}

type Gp = SparsePolynomial<PrimeField>;

fn poly(r: &Arc<PolyRing<PrimeField>>, t: Vec<(Vec<u16>, u32)>) -> Gp {
    Gp::from_terms(
        r,
        t.into_iter().map(|(e, c)| (Monomial::new(e), c)).collect(),
    )
}

fn terms() -> impl Strategy<Value = Vec<(Vec<u16>, u32)>> {
    prop::collection::vec((prop::collection::vec(0u16..3, 3), 1u32..263), 1..4)
}

fn groebner_floor() -> (bool, String) {
    let r = PolyRing::new(gf(), &["x", "y", "z"]);
    let strat = (prop::collection::vec(terms(), 1..4), terms(), terms());
    let res = runner(64).run(&strat, |(gens, f, g)| {
        let gens: Vec<Gp> = gens
            .into_iter()
            .map(|t| poly(&r, t))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            return Ok(());
        }
        let b = buchberger(&gens, MonomialOrder::Grevlex, None).unwrap();
        let again = buchberger(b.generators(), MonomialOrder::Grevlex, None).unwrap();
        prop_assert_eq!(again.generators(), b.generators());
        let nf = |p: &Gp| normal_form(p, &b).unwrap();
        let (f, g) = (poly(&r, f), poly(&r, g));
        prop_assert_eq!(nf(&(&f + &g)), &nf(&f) + &nf(&g));
        prop_assert_eq!(nf(&(&f * &g)), nf(&(&nf(&f) * &nf(&g))));
        Ok(())
    });
    outcome(res)
}

fn hilbert_floor() -> (bool, String) {
    let strat = (1usize..=6).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(
                prop::collection::vec(0u16..4, n).prop_map(Monomial::new),
                0..8,
            ),
        )
    });
    let res = runner(50).run(&strat, |(n, gens)| {
        let num = hilbert_numerator(&gens, n).unwrap();
        for k in 0..=8 {
            prop_assert_eq!(
                num.hilbert_function(k),
                BigInt::from(hilbert_function_oracle(&gens, n, k, 1 << 24).unwrap())
            );
        }
        Ok(())
    });
    outcome(res)
}

fn euler_floor() -> (bool, String) {
    let d = DatasetBundle::load(QuadExtField, false).unwrap();
    let mut bad = Vec::new();
    let all: Vec<&SparsePolynomial<QuadExtField>> = d
        .equations
        .iter()
        .chain(&d.curve_c)
        .chain(d.sextic.polynomials())
        .collect();
    for (i, f) in all.iter().enumerate() {
        let r = f.ring();
        let degrees: BTreeSet<u32> = f.terms().iter().map(|(m, _)| m.degree()).collect();
        for deg in degrees {
            let part = SparsePolynomial::from_terms(
                r,
                f.terms()
                    .iter()
                    .filter(|(m, _)| m.degree() == deg)
                    .cloned()
                    .collect(),
            );
            let lhs = sum_all(
                r,
                (0..r.nvars())
                    .map(|j| &SparsePolynomial::var(r, j) * &part.derivative(j))
                    .collect(),
            );
            if lhs != part.scale(&QuadExtScalar::from_ints(deg as i64, 0)) {
                bad.push(i);
            }
        }
    }
    (
        bad.is_empty(),
        format!("{} polynomials, failures {bad:?}", all.len()),
    )
}

fn floor() -> Vec<Line> {
    [
        ("floor field axioms", field_axioms()),
        ("floor GB idempotence and normal form", groebner_floor()),
        ("floor Hilbert numerator vs oracle", hilbert_floor()),
        ("floor Euler identity on the dataset", euler_floor()),
    ]
    .into_iter()
    .map(|(id, (pass, detail))| line(id, pass, detail))
    .collect()
}

#[test]
fn acceptance() {
    let (code, report) = run_reference();
    let mut lines = criteria(&report);
    lines.push(line(
        "cli fppcert all exit 0",
        code == Some(0) && report["overall"] == "pass",
        format!("exit {code:?}, overall {}", report["overall"]),
    ));
    lines.extend(floor());
    for l in &lines {
        println!(
            "{} {:<40} {}",
            if l.pass { "PASS" } else { "FAIL" },
            l.id,
            l.detail
        );
    }
    let failed: Vec<&str> = lines.iter().filter(|l| !l.pass).map(|l| l.id).collect();
    assert!(failed.is_empty(), "failed: {failed:?}");
}
