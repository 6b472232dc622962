use erq_core::poly::multivariate_gcd;
use erq_core::{format_polynomial, parse_with, Polynomial, Rational, UniPoly};
use proptest::prelude::*;

const NAMES: [&str; 3] = ["x", "y", "z"];

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn poly(arity: usize, max_exp: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, arity), rational()), 0..=terms)
        .prop_map(move |t| Polynomial::from_terms(arity, t))
}

fn poly_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    (1usize..=3).prop_flat_map(|n| (poly(n, 3, 5), poly(n, 3, 5), poly(n, 3, 5)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_laws((a, b, c) in poly_triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(a.arity()), a.clone());
        prop_assert_eq!(&(-&a) + &a, Polynomial::zero(a.arity()));
    }

    #[test]
    fn leibniz_rule((a, b, _c) in poly_triple(), v in 0usize..3) {
        let v = v % a.arity();
        let d = |p: &Polynomial| p.partial_derivative(v).unwrap();
        prop_assert_eq!(d(&(&a * &b)), &(&d(&a) * &b) + &(&a * &d(&b)));
    }

    #[test]
    fn gcd_divides_and_keeps_common_factor((a, b, c) in poly_triple()) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let (ac, bc) = (&a * &c, &b * &c);
        let g = multivariate_gcd(&ac, &bc);
        prop_assert!(ac.div_exact(&g).is_some());
        prop_assert!(bc.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c).is_some());
    }

    #[test]
    fn shift_round_trip(
        a in (1usize..=3).prop_flat_map(|n| poly(n, 4, 6)),
        offs in prop::collection::vec(rational(), 3),
    ) {
        let n = a.arity();
        let back: Vec<Rational> = offs[..n].iter().map(|o| -o).collect();
        prop_assert_eq!(a.shift(&offs[..n]).unwrap().shift(&back).unwrap(), a);
    }

    #[test]
    fn shift_agrees_with_evaluation(
        a in (1usize..=3).prop_flat_map(|n| poly(n, 3, 5)),
        offs in prop::collection::vec(rational(), 3),
        pt in prop::collection::vec(rational(), 3),
    ) {
        let n = a.arity();
        let moved: Vec<Rational> = pt[..n].iter().zip(&offs).map(|(x, o)| x + o).collect();
        prop_assert_eq!(
            a.shift(&offs[..n]).unwrap().evaluate(&pt[..n]).unwrap(),
            a.evaluate(&moved).unwrap()
        );
    }

    #[test]
    fn composition_agrees_with_evaluation(
        a in poly(2, 3, 5),
        s in poly(2, 2, 3),
        pt in prop::collection::vec(rational(), 2),
    ) {
        let composed = a.compose(0, &s).unwrap();
        let inner = s.evaluate(&pt).unwrap();
        prop_assert_eq!(
            composed.evaluate(&pt).unwrap(),
            a.evaluate(&[inner, pt[1].clone()]).unwrap()
        );
    }

    #[test]
    fn univariate_division(a in prop::collection::vec(rational(), 0..7), b in prop::collection::vec(rational(), 1..5)) {
        let (a, b) = (UniPoly::new(a), UniPoly::new(b));
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn parser_round_trip(a in (1usize..=3).prop_flat_map(|n| poly(n, 6, 8))) {
        let names = &NAMES[..a.arity()];
        let text = format_polynomial(&a, names);
        prop_assert_eq!(parse_with(&text, names).unwrap(), a);
    }
}
