use std::collections::BTreeSet;

use algebra_core::{sum_all, QuadExtField, QuadExtScalar, SparsePolynomial};
use fpp_dataset::DatasetBundle;

/// Σⱼ xⱼ·∂f/∂xⱼ = d·f on each degree-d component.
fn euler_holds(f: &SparsePolynomial<QuadExtField>) -> bool {
    let r = f.ring();
    let degrees: BTreeSet<u32> = f.terms().iter().map(|(m, _)| m.degree()).collect();
    degrees.into_iter().all(|d| {
        let part = SparsePolynomial::from_terms(
            r,
            f.terms()
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        );
        let lhs = sum_all(
            r,
            (0..r.nvars())
                .map(|j| &SparsePolynomial::var(r, j) * &part.derivative(j))
                .collect(),
        );
        lhs == part.scale(&QuadExtScalar::from_ints(d as i64, 0)) && lhs == part.euler_operator()
    })
}

#[test]
fn euler_identity_on_every_dataset_polynomial() {
    for conjugate in [false, true] {
        let d = DatasetBundle::load(QuadExtField, conjugate).unwrap();
        let mut count = 0;
        for f in d
            .equations
            .iter()
            .chain(&d.curve_c)
            .chain(d.sextic.polynomials())
        {
            assert!(euler_holds(f), "{}", f.to_canonical());
            count += 1;
        }
        assert_eq!(count, 84 + d.curve_c.len() + d.sextic.polynomials().len());
        assert!(d
            .equations
            .iter()
            .all(|f| f.homogeneous_degree() == Some(3)));
    }
}
