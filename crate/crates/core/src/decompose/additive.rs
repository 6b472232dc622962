use crate::poly::{extract_outer_by_peeling, multivariate_gcd, Polynomial, UniPoly};
use crate::rational::Rational;

use super::AdditiveFormResult;

/// Finds `f` and inners with `F = f(g(x) + h(y) [+ u(z)])`.
///
/// For such an `F`, `F_x / F_j = g'(x) / g_j'(x_j)`, so after cancelling the
/// gcd of the two partials the numerator involves only `x` and the
/// denominator only `x_j`. The derivatives are those parts up to a common
/// scalar, fixed by making `g` monic. `f` is peeled from `F(x, 0, ..., 0)`,
/// which equals `f(g(x))` because the inners vanish at 0.
pub fn detect_additive_form(f: &Polynomial) -> Option<AdditiveFormResult> {
    let n = f.arity();
    if n < 2 || f.dependent_vars().len() != n {
        return None;
    }
    let f0 = f.partial_derivative(0).ok()?;

    let mut derivs: Vec<UniPoly> = Vec::with_capacity(n);
    for j in 1..n {
        let fj = f.partial_derivative(j).ok()?;
        let g = multivariate_gcd(&f0, &fj);
        let num = f0.div_exact(&g)?.to_univariate(0).ok()?;
        let den = fj.div_exact(&g)?.to_univariate(j).ok()?;
        if j == 1 {
            derivs.push(num);
            derivs.push(den);
            continue;
        }
        // Same g' up to the scalar `mu`: derivs[0] = mu * num.
        let mu = &derivs[0].leading_coeff() / &num.leading_coeff();
        if num.scale(&mu) != derivs[0] {
            return None;
        }
        derivs.push(den.scale(&mu));
    }

    let mut inners: Vec<UniPoly> = derivs.iter().map(UniPoly::integral).collect();
    let norm = inners[0].leading_coeff().recip();
    for g in &mut inners {
        *g = g.scale(&norm);
    }

    let mut on_axis = f.clone();
    for v in 1..n {
        on_axis = on_axis.specialize(v, &Rational::zero());
    }
    let p = on_axis.to_univariate(0).ok()?;
    let outer = extract_outer_by_peeling(&p, &inners[0])?;
    AdditiveFormResult::new(f, outer, inners).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_with;

    #[test]
    fn example2_square_of_cubic_sum() {
        let f = parse_with("x^6+2x^4+2x^3y^3+4x^3+x^2+2xy^3+4x+y^6+4y^3+4", &["x", "y"]).unwrap();
        let r = detect_additive_form(&f).unwrap();
        assert_eq!(r.outer(), &UniPoly::from_ints(&[4, 4, 1]));
        assert_eq!(r.inners()[0], UniPoly::from_ints(&[0, 1, 0, 1]));
        assert_eq!(r.inners()[1], UniPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(r.checks()[1].distinct_roots, 1);
        assert!(!r.satisfies_case_ii());
    }

    #[test]
    fn sum_of_squares_has_identity_outer() {
        let r = detect_additive_form(&parse_with("x^2+y^2", &["x", "y"]).unwrap()).unwrap();
        assert_eq!(r.outer(), &UniPoly::x());
        assert_eq!(r.inners()[0], UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(r.inners()[1], UniPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn shkredov_polynomial_is_not_additive() {
        assert!(detect_additive_form(&parse_with("x^2+xy+z", &["x", "y", "z"]).unwrap()).is_none());
    }

    #[test]
    fn three_variables_with_scaled_inners() {
        let f = parse_with("(2x^3-2x+3y^4-y+1/2z^3+z)^2-(2x^3-2x+3y^4-y+1/2z^3+z)", &["x", "y", "z"]).unwrap();
        let r = detect_additive_form(&f).unwrap();
        assert_eq!(r.inners()[0], UniPoly::from_ints(&[0, -1, 0, 1]));
        assert_eq!(r.inners()[2], UniPoly::new(vec![
            Rational::zero(),
            Rational::new(1, 2).unwrap(),
            Rational::zero(),
            Rational::new(1, 4).unwrap(),
        ]));
        assert_eq!(r.outer(), &UniPoly::from_ints(&[0, -2, 4]));
        assert!(r.satisfies_case_ii());
    }

    #[test]
    fn case_ii_inners_are_flagged() {
        let f = parse_with("(x^3-x+y^3-4y)^2", &["x", "y"]).unwrap();
        let r = detect_additive_form(&f).unwrap();
        assert!(r.satisfies_case_ii());
    }

    #[test]
    fn requires_every_variable() {
        assert!(detect_additive_form(&parse_with("x^3+x", &["x", "y"]).unwrap()).is_none());
    }
}
