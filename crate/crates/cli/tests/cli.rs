use std::process::{Command, Output};

use algebra_core::{QuadExtField, SparsePolynomial};
use certify::{CertConfig, Context};
use fpp_dataset::{expand_equations, sha256_hex, u_ring, GroupActionSpec};
use serde_json::Value;

fn fppcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fppcert"))
        .args(args)
        .output()
        .expect("fppcert runs")
}

fn report_without_timings(out: &Output) -> Value {
    let mut v: Value = serde_json::from_slice(&out.stdout).expect("report on stdout");
    for c in v["checks"].as_array_mut().unwrap() {
        c["ms"] = 0.into();
    }
    v
}

#[test]
fn nonresidue_prime_is_a_configuration_error() {
    let out = fppcert(&["all", "--prime", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("configuration error"));
}

#[test]
fn wrong_root_and_bad_flags_exit_2() {
    assert_eq!(
        fppcert(&["hilbert", "--sqrt-minus7", "17"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fppcert(&["lattice", "--checks", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(fppcert(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn equations_reparse_to_the_dataset() {
    let out = fppcert(&["equations"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let ring = u_ring(QuadExtField);
    let parsed: Vec<_> = text
        .lines()
        .map(|l| SparsePolynomial::parse_canonical(&ring, l).unwrap())
        .collect();
    assert_eq!(parsed.len(), 84);
    assert_eq!(
        parsed,
        expand_equations(&ring, &GroupActionSpec::default(), false).unwrap()
    );
    let ctx = Context::new(CertConfig::default()).unwrap();
    assert_eq!(sha256_hex(text.as_bytes()), ctx.dataset_sha256().unwrap());
    assert_eq!(fppcert(&["equations"]).stdout, text.as_bytes());

    let conj = String::from_utf8(fppcert(&["equations", "--emit-conjugate"]).stdout).unwrap();
    assert_eq!(conj.lines().count(), 84);
    assert_ne!(conj, text);
}

#[test]
fn reports_are_identical_modulo_timings() {
    let args = [
        "invariance",
        "--checks",
        "hilbert_series,automorphism,lattice",
        "--samples",
        "30",
    ];
    let (a, b) = (fppcert(&args), fppcert(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(report_without_timings(&a), report_without_timings(&b));
    let v = report_without_timings(&a);
    assert_eq!(v["meta"]["sqrt_minus7"], 16);
    assert_eq!(v["meta"]["samples"], 30);
    assert_eq!(v["overall"], "pass");
}

#[test]
fn failing_check_exits_1() {
    let out = fppcert(&["invariance", "--checks", "group_invariance"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report_without_timings(&out)["overall"], "fail");
}

#[test]
fn lattice_csv_dump() {
    let path = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("lattice.csv");
    let out = fppcert(&["lattice", "--csv", path.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().filter(|l| l.ends_with(",true")).count(), 1);
}
