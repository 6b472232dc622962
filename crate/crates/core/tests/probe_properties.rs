use std::collections::BTreeSet;

use erq_core::probe::{
    curve_points_bounded_height, find_longest_progression, group_membership, popular_congruence_class, CurveSpec,
    MultGroupSpec, ProgressionKind,
};
use erq_core::{Rational, UniPoly};
use proptest::prelude::*;

/// Longest arithmetic progression by trying every first pair.
fn brute_arithmetic(values: &BTreeSet<i64>) -> usize {
    let v: Vec<i64> = values.iter().copied().collect();
    let mut best = v.len().min(1);
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = v[j] - v[i];
            let mut len = 2;
            while values.contains(&(v[i] + d * len as i64)) {
                len += 1;
            }
            best = best.max(len);
        }
    }
    best
}

fn brute_geometric(values: &BTreeSet<i64>) -> usize {
    let v: Vec<Rational> = values.iter().filter(|&&x| x != 0).map(|&x| Rational::from(x)).collect();
    let set: BTreeSet<Rational> = v.iter().cloned().collect();
    let mut best = v.len().min(1);
    for a in &v {
        for b in &v {
            let r = b / a;
            if r.abs().is_one() {
                continue;
            }
            let mut len = 2;
            let mut next = b * &r;
            while set.contains(&next) {
                len += 1;
                next = &next * &r;
            }
            best = best.max(len);
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn arithmetic_search_matches_brute_force(values in prop::collection::btree_set(-60i64..=60, 1..40)) {
        let rs: Vec<Rational> = values.iter().map(|&x| Rational::from(x)).collect();
        let p = find_longest_progression(ProgressionKind::Arithmetic, &rs).unwrap();
        prop_assert_eq!(p.length, brute_arithmetic(&values));
        for w in p.witness.windows(3) {
            prop_assert_eq!(&w[1] + &w[1], &w[0] + &w[2]);
        }
    }

    #[test]
    fn geometric_search_matches_brute_force(values in prop::collection::btree_set(-64i64..=64, 1..30)) {
        let rs: Vec<Rational> = values.iter().map(|&x| Rational::from(x)).collect();
        let p = find_longest_progression(ProgressionKind::Geometric, &rs).unwrap();
        prop_assert_eq!(p.length, brute_geometric(&values));
        for w in p.witness.windows(3) {
            prop_assert_eq!(&w[1] * &w[1], &w[0] * &w[2]);
        }
    }

    #[test]
    fn membership_matches_small_search(
        gens in prop::collection::vec(prop_oneof![Just(-1i64), 2i64..=12], 1..=2),
        target in prop::collection::vec(-4i64..=4, 2),
    ) {
        let g: Vec<Rational> = gens.iter().map(|&x| Rational::from(x)).collect();
        let spec = MultGroupSpec::new(g.clone()).unwrap();
        let r: Rational = g.iter().zip(&target).map(|(a, &e)| a.powi(e)).product();
        let beta = group_membership(&r, &spec).expect("constructed as a member");
        let back: Rational = g.iter().zip(&beta).map(|(a, &e)| a.powi(e)).product();
        prop_assert_eq!(back, r.clone());

        let other = &r * &Rational::from(13);
        let found = (-6i64..=6)
            .flat_map(|i| (-6i64..=6).map(move |j| (i, j)))
            .any(|(i, j)| {
                let v: Rational = g.iter().zip([i, j]).map(|(a, e)| a.powi(e)).product();
                v == other
            });
        prop_assert_eq!(group_membership(&other, &spec).is_some(), found);
    }

    #[test]
    fn pigeonhole(vectors in prop::collection::vec(prop::collection::vec(-20i64..=20, 2), 1..80), w in 2i64..=6) {
        let (_, count) = popular_congruence_class(&vectors, w).unwrap();
        prop_assert!(count * (w * w) as usize >= vectors.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn even_curves_are_symmetric(c in prop::collection::vec(-5i64..=5, 1..4), h in 1u64..=12) {
        // g(x) = c_0 + c_1 x^2 + c_2 x^4
        let mut coeffs = Vec::new();
        for v in &c {
            coeffs.push(*v);
            coeffs.push(0);
        }
        coeffs.pop();
        let g = UniPoly::from_ints(&coeffs);
        prop_assume!(g.deg() > 0);
        let spec = CurveSpec::new(g, Rational::one(), 2).unwrap();
        let pts: BTreeSet<(Rational, Rational)> = curve_points_bounded_height(&spec, h).unwrap().into_iter().collect();
        for (x, y) in &pts {
            prop_assert!(pts.contains(&(-x, y.clone())));
        }
    }
}
