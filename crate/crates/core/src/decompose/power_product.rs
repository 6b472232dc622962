use num_integer::Integer;

use crate::poly::{Polynomial, UniPoly};
use crate::rational::Rational;

use super::PowerProductResult;

/// Finds `f`, shifts and exponents with
/// `F = f((x+a)^alpha (y+b)^beta (z+c)^gamma)`.
///
/// The leading coefficient of `F` in any variable is
/// `f_top * prod (x_i + a_i)^(deg f * e_i)` over the other variables; taking
/// leading coefficients in all but one of those leaves a pure power of a
/// linear polynomial, which pins each shift. After undoing the shifts the
/// nonconstant support must lie on one ray `k * (alpha, beta, gamma)`, and the
/// coefficients along the ray are `f`.
pub fn detect_power_product_form(f: &Polynomial) -> Option<PowerProductResult> {
    let n = f.arity();
    if n < 2 || f.is_constant() || f.dependent_vars().len() != n {
        return None;
    }

    let mut shifts = Vec::with_capacity(n);
    for target in 0..n {
        let pivot = if target == 0 { 1 } else { 0 };
        let mut lc = f.leading_coeff_in(pivot).ok()?;
        for other in 0..n {
            if other != target && other != pivot {
                lc = lc.leading_coeff_in(other).ok()?;
            }
        }
        let lp = lc.to_univariate(target).ok()?.linear_power_test()?;
        shifts.push(-lp.root);
    }

    let unshift: Vec<Rational> = shifts.iter().map(|a| -a).collect();
    let g = f.shift(&unshift).ok()?;

    let mut direction: Option<Vec<u32>> = None;
    let mut along: Vec<(u32, Rational)> = Vec::new();
    let mut constant = Rational::zero();
    for (m, c) in g.terms() {
        if m.is_one() {
            constant = c.clone();
            continue;
        }
        let e = m.exponents();
        let k = e.iter().fold(0u32, |acc, &x| acc.gcd(&x));
        let dir: Vec<u32> = e.iter().map(|&x| x / k).collect();
        match &direction {
            None => direction = Some(dir),
            Some(d) if *d == dir => {}
            Some(_) => return None,
        }
        along.push((k, c.clone()));
    }
    let direction = direction?;
    if direction.iter().any(|&x| x == 0) {
        return None;
    }
    let top = along.iter().map(|(k, _)| *k).max()? as usize;
    let mut outer = vec![Rational::zero(); top + 1];
    outer[0] = constant;
    for (k, c) in along {
        outer[k as usize] = c;
    }
    PowerProductResult::new(f, UniPoly::new(outer), shifts, direction).ok()
}
