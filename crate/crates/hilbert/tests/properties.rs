use algebra_core::Monomial;
use hilbert::{hilbert_function_oracle, hilbert_numerator, hilbert_numerator_with, PivotStrategy};
use num_bigint::BigInt;
use proptest::prelude::*;

fn ideal_strategy() -> impl Strategy<Value = (usize, Vec<Monomial>)> {
    (1usize..=6).prop_flat_map(|n| {
        let mono = proptest::collection::vec(0u16..4, n).prop_map(Monomial::new);
        (Just(n), proptest::collection::vec(mono, 0..8))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn numerator_matches_oracle((n, gens) in ideal_strategy()) {
        let num = hilbert_numerator(&gens, n).unwrap();
        for k in 0..=8 {
            let oracle = hilbert_function_oracle(&gens, n, k, 1 << 24).unwrap();
            prop_assert_eq!(num.hilbert_function(k), BigInt::from(oracle));
        }
    }

    #[test]
    fn pivot_choice_is_irrelevant((n, gens) in ideal_strategy()) {
        let a = hilbert_numerator_with(&gens, n, PivotStrategy::MostFrequent).unwrap();
        let b = hilbert_numerator_with(&gens, n, PivotStrategy::LastVariable).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn polynomial_agrees_with_function_past_threshold((n, gens) in ideal_strategy()) {
        let num = hilbert_numerator(&gens, n).unwrap();
        let hp = num.hilbert_polynomial();
        let start = hp.k0.max(0) as u32;
        for k in start..start + 6 {
            let hf = num.hilbert_function(k);
            prop_assert_eq!(hp.evaluate(k as i64), num_rational::BigRational::from_integer(hf));
        }
    }
}
