use algebra_core::{
    bareiss_determinant, minor_determinant, reduce_to_prime_field, ExactMatrix, Field, Monomial,
    PolyRing, PrimeField, QuadExtField, QuadExtScalar, SparsePolynomial,
};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = QuadExtScalar> {
    (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
        .prop_map(|(a, b, c, d)| QuadExtScalar::from_fracs((a, b), (c, d)))
}

/// Denominators avoid multiples of 263.
fn p_scalar() -> impl Strategy<Value = QuadExtScalar> {
    (-500i64..500, 1i64..262, -500i64..500, 1i64..262)
        .prop_map(|(a, b, c, d)| QuadExtScalar::from_fracs((a, b), (c, d)))
}

fn gf() -> PrimeField {
    PrimeField::new(263, 16).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), QuadExtScalar::one());
        }
    }

    #[test]
    fn reduction_is_a_homomorphism(x in p_scalar(), y in p_scalar()) {
        let f = gf();
        let (rx, ry) = (reduce_to_prime_field(&x, &f).unwrap(), reduce_to_prime_field(&y, &f).unwrap());
        prop_assert_eq!(reduce_to_prime_field(&(&x * &y), &f).unwrap(), f.mul(&rx, &ry));
        prop_assert_eq!(reduce_to_prime_field(&(&x + &y), &f).unwrap(), f.add(&rx, &ry));
    }
}

fn poly_strategy(n: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0u16..4, n), -9i64..9, -9i64..9),
        0..8,
    )
}

fn build(
    r: &std::sync::Arc<PolyRing<QuadExtField>>,
    t: Vec<(Vec<u16>, i64, i64)>,
) -> SparsePolynomial<QuadExtField> {
    SparsePolynomial::from_terms(
        r,
        t.into_iter()
            .map(|(e, a, b)| (Monomial::new(e), QuadExtScalar::from_ints(a, b)))
            .collect(),
    )
}

/// Plain cofactor expansion along the first row.
fn cofactor(m: &ExactMatrix<SparsePolynomial<PrimeField>>) -> SparsePolynomial<PrimeField> {
    let n = m.rows();
    let ring = m.get(0, 0).ring().clone();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = SparsePolynomial::zero(&ring);
    for c in 0..n {
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&j| j != c).collect();
        let t = m.get(0, c) * &cofactor(&m.submatrix(&rows, &cols).unwrap());
        acc = if c % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn identity_substitution(t in poly_strategy(3)) {
        let r = PolyRing::new(QuadExtField, &["a", "b", "c"]);
        let f = build(&r, t);
        let id: Vec<_> = (0..3).map(|i| SparsePolynomial::var(&r, i)).collect();
        prop_assert_eq!(f.substitute(&id).unwrap(), f);
    }

    #[test]
    fn euler_identity_on_homogeneous_parts(t in poly_strategy(3), d in 0u32..5) {
        let r = PolyRing::new(QuadExtField, &["a", "b", "c"]);
        let f = build(&r, t.into_iter().filter(|(e, _, _)| e.iter().map(|&x| x as u32).sum::<u32>() == d).collect());
        let lhs = algebra_core::sum_all(&r, (0..3).map(|j| &SparsePolynomial::var(&r, j) * &f.derivative(j)).collect());
        prop_assert_eq!(lhs, f.scale(&QuadExtScalar::from_ints(d as i64, 0)));
    }

    #[test]
    fn determinants_agree(n in 1usize..=4, seed in prop::collection::vec((prop::collection::vec(0u16..3, 2), 0u32..263), 16 * 3)) {
        let r = PolyRing::new(gf(), &["x", "y"]);
        let m = ExactMatrix::from_fn(n, n, |i, j| {
            let k = 3 * (i * 4 + j);
            SparsePolynomial::from_terms(&r, seed[k..k + 3].iter().map(|(e, c)| (Monomial::new(e.clone()), *c)).collect())
        });
        let idx: Vec<usize> = (0..n).collect();
        let lap = minor_determinant(&m, &idx, &idx).unwrap();
        prop_assert_eq!(&lap, &cofactor(&m));
        prop_assert_eq!(&lap, &bareiss_determinant(&m).unwrap());
    }
}
