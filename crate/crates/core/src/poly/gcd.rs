//! Multivariate gcd by subresultant polynomial remainder sequences.
//!
//! The shared variable of least degree is taken as the main variable: a
//! polynomial in `v` with coefficients in `Q[rest]` is split into its content
//! (gcd of coefficients, computed recursively) and primitive part, and the
//! primitive parts are run through a remainder sequence: primitive when only
//! one other variable remains, subresultant otherwise. An evaluation bound on
//! the gcd degree ends the sequence early once a candidate divides both.

use super::{Monomial, Polynomial};
use crate::rational::Rational;

/// Greatest common divisor normalized to primitive integer coefficients with
/// a positive leading coefficient. `gcd(p, 0)` is `p` normalized; `gcd(0, 0)`
/// is zero. Panics on arity mismatch.
pub fn multivariate_gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    assert_eq!(p.arity(), q.arity(), "arity mismatch");
    if p.is_zero() {
        return q.normalize_primitive();
    }
    if q.is_zero() {
        return p.normalize_primitive();
    }
    let vars: Vec<usize> = (0..p.arity())
        .filter(|&v| p.depends_on(v) || q.depends_on(v))
        .collect();
    gcd_rec(&p.normalize_primitive(), &q.normalize_primitive(), &vars).normalize_primitive()
}

fn gcd_rec(p: &Polynomial, q: &Polynomial, vars: &[usize]) -> Polynomial {
    let arity = p.arity();
    if p.is_constant() || q.is_constant() {
        return Polynomial::one(arity);
    }
    let vars: Vec<usize> = vars.iter().copied().filter(|&v| p.depends_on(v) || q.depends_on(v)).collect();
    let shared = vars
        .iter()
        .copied()
        .filter(|&v| p.depends_on(v) && q.depends_on(v))
        .min_by_key(|&v| p.degree_in(v).max(q.degree_in(v)));
    let Some(v) = shared else {
        // some variable occurs in only one argument, so the gcd is free of it
        let Some(&v) = vars.first() else {
            return Polynomial::one(arity);
        };
        let rest: Vec<usize> = vars.iter().copied().filter(|&u| u != v).collect();
        return match p.depends_on(v) {
            true => gcd_rec(&content_in(p, v, &rest), q, &rest),
            false => gcd_rec(p, &content_in(q, v, &rest), &rest),
        };
    };
    let rest: Vec<usize> = vars.iter().copied().filter(|&u| u != v).collect();

    let cp = content_in(p, v, &rest);
    let cq = content_in(q, v, &rest);
    let content = gcd_rec(&cp, &cq, &rest);
    let mut a = p.div_exact(&cp).expect("content divides");
    let mut b = q.div_exact(&cq).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }

    let bound = degree_bound(&a, &b, v, &rest);
    if bound == 0 {
        return content;
    }
    let (pa, pb) = (a.clone(), b.clone());
    let divides_both = |c: &Polynomial| -> Option<Polynomial> {
        let c = c.normalize_primitive();
        let c = c.div_exact(&content_in(&c, v, &rest))?;
        (pa.div_exact(&c).is_some() && pb.div_exact(&c).is_some()).then_some(c)
    };
    if b.degree_in(v) == Some(bound) {
        if let Some(c) = divides_both(&b) {
            return (&content * &c).normalize_primitive();
        }
    }

    // primitive remainder sequence with one other variable, subresultant otherwise
    let one = Polynomial::one(arity);
    let (mut g, mut h) = (one.clone(), one.clone());
    let last = loop {
        let delta = a.degree_in(v).unwrap_or(0) - b.degree_in(v).unwrap_or(0);
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            break b;
        }
        if !r.depends_on(v) {
            break one.clone();
        }
        a = b;
        if rest.len() <= 1 {
            // contents are univariate here, so keeping members primitive is cheap
            let cr = content_in(&r, v, &rest);
            b = r.div_exact(&cr).expect("content divides").normalize_primitive();
        } else {
            let divisor = &g * &h.pow(delta);
            b = r.div_exact(&divisor).expect("subresultant division is exact");
            g = a.leading_coeff_in(v).expect("variable in range");
            if delta > 0 {
                h = g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant division is exact");
            }
        }
        if b.degree_in(v) == Some(bound) {
            if let Some(c) = divides_both(&b) {
                return (&content * &c).normalize_primitive();
            }
        }
    };
    if last.is_constant() {
        return content;
    }
    let last = last.normalize_primitive();
    let cl = content_in(&last, v, &rest);
    let last = last.div_exact(&cl).expect("content divides");
    (&content * &last).normalize_primitive()
}

/// Upper bound for `deg_v gcd(a, b)`: the degree of the gcd of images at
/// points of `rest` where neither leading coefficient vanishes.
fn degree_bound(a: &Polynomial, b: &Polynomial, v: usize, rest: &[usize]) -> u32 {
    let mut best = a.degree_in(v).unwrap_or(0).min(b.degree_in(v).unwrap_or(0));
    let (la, lb) = (a.leading_coeff_in(v).expect("in range"), b.leading_coeff_in(v).expect("in range"));
    for attempt in 0..6i64 {
        if best == 0 {
            break;
        }
        let point: Vec<Rational> = (0..rest.len() as i64)
            .map(|j| Rational::from((attempt * 5 + j * 3 + 2) % 17 - 6))
            .collect();
        let at = |p: &Polynomial| {
            rest.iter()
                .zip(&point)
                .fold(p.clone(), |acc, (&u, c)| acc.specialize(u, c))
        };
        if at(&la).is_zero() || at(&lb).is_zero() {
            continue;
        }
        let (ia, ib) = (at(a).to_univariate(v), at(b).to_univariate(v));
        if let (Ok(ia), Ok(ib)) = (ia, ib) {
            best = best.min(ia.gcd(&ib).deg() as u32);
        }
    }
    best
}

/// Gcd over `Q[rest]` of the coefficients of `p` in `v`.
fn content_in(p: &Polynomial, v: usize, rest: &[usize]) -> Polynomial {
    let mut coeffs = p.coefficients_in(v).into_iter().filter(|c| !c.is_zero());
    let Some(first) = coeffs.next() else {
        return Polynomial::zero(p.arity());
    };
    let mut g = first.normalize_primitive();
    for c in coeffs {
        if g.is_constant() {
            break;
        }
        g = gcd_rec(&g, &c.normalize_primitive(), rest);
    }
    if g.is_constant() {
        Polynomial::one(p.arity())
    } else {
        g
    }
}

/// `lc_v(b)^(deg a - deg b + 1) * a` reduced modulo `b` in `v`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v).unwrap_or(0);
    let lb = b.leading_coeff_in(v).expect("variable in range");
    let mut steps = (a.degree_in(v).unwrap_or(0) + 1).saturating_sub(db);
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if dr < db || r.is_zero() {
            break;
        }
        let lr = r.leading_coeff_in(v).expect("variable in range");
        let mut shift = vec![0; a.arity()];
        shift[v] = dr - db;
        let sub = (&lr * b).mul_monomial(&Monomial::new(shift), &Rational::one());
        r = &(&r * &lb) - &sub;
        steps -= 1;
    }
    if steps > 0 {
        r = &r * &lb.pow(steps);
    }
    r
}
