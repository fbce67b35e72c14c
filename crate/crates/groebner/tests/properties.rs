use std::sync::Arc;

use algebra_core::{Monomial, MonomialOrder, PolyRing, PrimeField, SparsePolynomial};
use groebner::{buchberger, normal_form};
use proptest::prelude::*;

type P = SparsePolynomial<PrimeField>;

fn ring() -> Arc<PolyRing<PrimeField>> {
    PolyRing::new(PrimeField::new(263, 16).unwrap(), &["x", "y", "z"])
}

fn terms() -> impl Strategy<Value = Vec<(Vec<u16>, u32)>> {
    prop::collection::vec((prop::collection::vec(0u16..3, 3), 1u32..263), 1..4)
}

fn build(r: &Arc<PolyRing<PrimeField>>, t: Vec<(Vec<u16>, u32)>) -> P {
    P::from_terms(
        r,
        t.into_iter().map(|(e, c)| (Monomial::new(e), c)).collect(),
    )
}

fn ideal() -> impl Strategy<Value = Vec<Vec<(Vec<u16>, u32)>>> {
    prop::collection::vec(terms(), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_of_a_basis_is_itself(gens in ideal()) {
        let r = ring();
        let gens: Vec<P> = gens.into_iter().map(|t| build(&r, t)).filter(|f| !f.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let b = buchberger(&gens, MonomialOrder::Grevlex, None).unwrap();
        let again = buchberger(b.generators(), MonomialOrder::Grevlex, None).unwrap();
        prop_assert_eq!(again.generators(), b.generators());
        for g in &gens {
            prop_assert!(normal_form(g, &b).unwrap().is_zero());
        }
    }

    #[test]
    fn normal_form_is_a_ring_morphism_to_the_quotient(gens in ideal(), f in terms(), g in terms(), c in 1u32..263) {
        let r = ring();
        let gens: Vec<P> = gens.into_iter().map(|t| build(&r, t)).filter(|f| !f.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let b = buchberger(&gens, MonomialOrder::Grevlex, None).unwrap();
        let (f, g) = (build(&r, f), build(&r, g));
        let nf = |p: &P| normal_form(p, &b).unwrap();
        prop_assert_eq!(nf(&(&f + &g)), &nf(&f) + &nf(&g));
        prop_assert_eq!(nf(&f.scale(&c)), nf(&f).scale(&c));
        prop_assert_eq!(nf(&(&f * &g)), nf(&(&nf(&f) * &nf(&g))));
        prop_assert_eq!(nf(&nf(&f)), nf(&f));
        let lead = b.leading_monomials();
        prop_assert!(nf(&f).terms().iter().all(|(m, _)| !lead.iter().any(|l| l.divides(m))));
    }
}
