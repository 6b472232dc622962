use crate::poly::Polynomial;
use crate::rational::Rational;

use super::LinearFormResult;

/// Finds `f` and coefficients with `F = f(x + a y + b z)`.
///
/// The gradient of such an `F` is `f'(L) * (1, a, b)`, so every partial
/// derivative must be a constant multiple of the first nonzero one. When the
/// first variable does not occur, the form is led by the first variable that
/// does (its coefficient is 1 and earlier ones are 0). With the ratios fixed,
/// `f(t) = F(t e_p)` and the recomposition decides.
pub fn detect_linear_form(f: &Polynomial) -> Option<LinearFormResult> {
    let n = f.arity();
    let deps = f.dependent_vars();
    let &lead = deps.first()?;
    let d_lead = f.partial_derivative(lead).ok()?;
    let (d_lead_lm, d_lead_lc) = d_lead
        .leading_term()
        .map(|(m, c)| (m.clone(), c.clone()))?;

    let mut coeffs = vec![Rational::zero(); n];
    coeffs[lead] = Rational::one();
    for &v in &deps[1..] {
        let dv = f.partial_derivative(v).ok()?;
        let (lm, lc) = dv.leading_term()?;
        if *lm != d_lead_lm {
            return None;
        }
        let ratio = lc / &d_lead_lc;
        if dv != d_lead.scale(&ratio) {
            return None;
        }
        coeffs[v] = ratio;
    }

    let (_, outer) = {
        let mut on_axis = f.clone();
        for v in 0..n {
            if v != lead {
                on_axis = on_axis.specialize(v, &Rational::zero());
            }
        }
        on_axis.as_univariate().ok()?
    };
    LinearFormResult::new(f, outer, coeffs).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_with;
    use crate::poly::UniPoly;

    fn p3(s: &str) -> Polynomial {
        parse_with(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn cubic_in_three_variables() {
        let r = detect_linear_form(&p3("(x+2y-z)^3+1")).unwrap();
        assert_eq!(r.outer(), &UniPoly::from_ints(&[1, 0, 0, 1]));
        assert_eq!(r.coeffs(), &[Rational::one(), Rational::from(2), Rational::from(-1)]);
    }

    #[test]
    fn shkredov_polynomial_is_not_linear() {
        assert!(detect_linear_form(&p3("x^2+xy+z")).is_none());
    }

    #[test]
    fn independent_variable_gets_zero_coefficient() {
        let r = detect_linear_form(&parse_with("x^2", &["x", "y"]).unwrap()).unwrap();
        assert_eq!(r.outer(), &UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(r.coeffs(), &[Rational::one(), Rational::zero()]);
    }

    #[test]
    fn form_led_by_later_variable() {
        let r = detect_linear_form(&p3("(y-3z)^2")).unwrap();
        assert_eq!(r.coeffs(), &[Rational::zero(), Rational::one(), Rational::from(-3)]);
        assert_eq!(r.outer(), &UniPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn rational_coefficients() {
        let r = detect_linear_form(&p3("(x+1/2y)^2-3(x+1/2y)")).unwrap();
        assert_eq!(r.coeffs()[1], Rational::new(1, 2).unwrap());
        assert_eq!(r.coeffs()[2], Rational::zero());
    }

    #[test]
    fn constants_have_no_form() {
        assert!(detect_linear_form(&p3("5")).is_none());
    }
}
