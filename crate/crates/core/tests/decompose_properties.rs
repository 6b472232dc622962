mod common;

use common::*;
use erq_core::decompose::{
    classify, detect_additive_form, detect_linear_form, detect_multiplicative_form, detect_power_product_form,
    RationalVerdict, RealVerdict,
};
use erq_core::{Polynomial, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn linear_forms_are_found(seed in any::<u64>(), arity in 2usize..=3) {
        let f = linear_instance(&mut rng(seed), arity);
        let r = detect_linear_form(&f).expect("detected");
        prop_assert_eq!(r.recompose(), f.clone());
        prop_assert!(r.coeffs()[0].is_one());
        prop_assert!(matches!(classify(&f).unwrap().over_q, RationalVerdict::NonExpander(_)));
    }

    #[test]
    fn linear_forms_are_additive(seed in any::<u64>(), arity in 2usize..=3) {
        let f = linear_instance(&mut rng(seed), arity);
        prop_assert!(detect_additive_form(&f).is_some());
    }

    #[test]
    fn power_products_are_found(seed in any::<u64>(), arity in 2usize..=3) {
        let f = power_product_instance(&mut rng(seed), arity);
        let r = detect_power_product_form(&f).expect("detected");
        prop_assert_eq!(r.recompose(), f);
        let g = r.exponents().iter().fold(0, |g, &e| num_integer::gcd(g, e));
        prop_assert_eq!(g, 1);
    }

    #[test]
    fn additive_forms_are_found(seed in any::<u64>(), arity in 2usize..=3) {
        let f = additive_instance(&mut rng(seed), arity);
        let r = detect_additive_form(&f).expect("detected");
        prop_assert_eq!(r.recompose(), f.clone());
        prop_assert!(r.inners()[0].leading_coeff().is_one());
        prop_assert!(r.inners().iter().all(|g| g.coeff(0).is_zero()));
        prop_assert!(matches!(classify(&f).unwrap().over_r, RealVerdict::NonExpander(_)));
    }

    #[test]
    fn multiplicative_forms_are_found(seed in any::<u64>()) {
        let f = multiplicative_instance(&mut rng(seed), 2);
        let r = detect_multiplicative_form(&f).expect("detected");
        prop_assert_eq!(r.recompose(), f);
    }

    #[test]
    fn verdicts_ignore_affine_changes_of_value(seed in any::<u64>(), arity in 2usize..=3, which in 0usize..3) {
        let mut r = rng(seed);
        let f = match which {
            0 => linear_instance(&mut r, arity),
            1 => additive_instance(&mut r, arity),
            _ => random_polynomial(&mut r, arity, 4, 3),
        };
        prop_assume!(f.dependent_vars().len() >= 2);
        let c = nonzero_rational(&mut r);
        let k = small_rational(&mut r);
        let g = &f.scale(&c) + &Polynomial::constant(arity, k);
        let (vf, vg) = (classify(&f).unwrap(), classify(&g).unwrap());
        prop_assert_eq!(
            matches!(vf.over_q, RationalVerdict::NonExpander(_)),
            matches!(vg.over_q, RationalVerdict::NonExpander(_))
        );
        prop_assert_eq!(
            matches!(vf.over_r, RealVerdict::NonExpander(_)),
            matches!(vg.over_r, RealVerdict::NonExpander(_))
        );
    }

    #[test]
    fn shifts_keep_separated_forms(seed in any::<u64>(), arity in 2usize..=3) {
        let mut r = rng(seed);
        let f = additive_instance(&mut r, arity);
        let offs: Vec<Rational> = (0..arity).map(|_| small_rational(&mut r)).collect();
        let moved = f.shift(&offs).unwrap();
        prop_assert_eq!(detect_additive_form(&moved).expect("detected").recompose(), moved);
        let p = power_product_instance(&mut r, 2);
        let moved = p.shift(&offs[..2]).unwrap();
        prop_assert_eq!(detect_power_product_form(&moved).expect("detected").recompose(), moved);
    }
}
