mod common;

use common::*;
use erq_core::decompose::{classify, Certificate};
use erq_core::harness::{
    count_image, gen_set, image_size, measure_witness, pointwise_set_op, witness_for, witness_for_verdict,
    Execution, SetOp, SetSpec,
};
use erq_core::{parse_with, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_set() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set(-40i64..=40, 1..12).prop_map(|s| s.into_iter().map(Rational::from).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sumset_lower_bound(a in small_set(), b in small_set()) {
        let s = pointwise_set_op(SetOp::Sum, &a, &b);
        prop_assert!(s.len() + 1 >= a.len() + b.len());
        prop_assert!(s.len() <= a.len() * b.len());
    }

    #[test]
    fn image_is_at_most_the_grid(a in small_set(), b in small_set(), seed in any::<u64>()) {
        let f = random_polynomial(&mut ChaCha8Rng::seed_from_u64(seed), 2, 5, 3);
        let values = vec![a.clone(), b.clone()];
        let seq = count_image(&f, &values, Execution::Sequential).unwrap();
        let par = count_image(&f, &values, Execution::Parallel).unwrap();
        prop_assert_eq!(seq, par);
        prop_assert!(seq >= 1 && seq as usize <= a.len() * b.len());
    }

    #[test]
    fn sum_polynomial_matches_sumset(a in small_set(), b in small_set()) {
        let f = parse_with("x+y", &["x", "y"]).unwrap();
        let r = image_size(&f, &[SetSpec::Explicit(a.clone()), SetSpec::Explicit(b.clone())]).unwrap();
        prop_assert_eq!(r.count as usize, pointwise_set_op(SetOp::Sum, &a, &b).len());
    }

    #[test]
    fn progressions_have_their_size(start in -20i64..20, step in 1i64..7, n in 1usize..40) {
        prop_assert_eq!(gen_set(&SetSpec::ap(start, step, n)).unwrap().len(), n);
        prop_assert_eq!(gen_set(&SetSpec::gp(start.max(1), step + 1, n)).unwrap().len(), n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn witness_bounds_hold(seed in any::<u64>(), arity in 2usize..=3, n in 1usize..=50) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let f = linear_instance(&mut r, arity);
        let w = witness_for_verdict(&classify(&f).unwrap(), n).unwrap();
        let m = measure_witness(&f, &w).unwrap();
        prop_assert!(m.holds, "{} > {}", m.record.count, m.bound);

        let g = power_product_instance(&mut r, 2);
        let v = classify(&g).unwrap();
        if let Some(cert @ Certificate::PowerProduct(_)) = v.rational_certificate() {
            let w = witness_for(cert, n).unwrap();
            let m = measure_witness(&cert.recompose(), &w).unwrap();
            prop_assert!(m.holds, "{} > {}", m.record.count, m.bound);
        }
    }
}
