use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::poly::UniPoly;
use crate::rational::Rational;

use super::ProbeError;

/// Largest height accepted by the enumerators.
pub const MAX_HEIGHT: u64 = 100_000;

/// `s` with `s^w = r`, when rational. For even `w` the non-negative root is
/// returned.
pub fn rational_wth_root(r: &Rational, w: u32) -> Option<Rational> {
    if w < 2 {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    if r.is_negative() && w % 2 == 0 {
        return None;
    }
    let num = r.numer().abs();
    let den = r.denom();
    let rn = exact_root(&num, w)?;
    let rd = exact_root(den, w)?;
    let s = Rational::new(rn, rd).expect("root of a positive denominator");
    Some(if r.is_negative() { -s } else { s })
}

fn exact_root(n: &BigInt, w: u32) -> Option<BigInt> {
    let r = n.nth_root(w);
    (num_traits::pow(r.clone(), w as usize) == *n).then_some(r)
}

/// Every reduced `p/q` with `|p| <= H` and `1 <= q <= H`: 0 first, then by
/// height `max(|p|, q)`, then by value.
pub fn enumerate_rationals_by_height(h: u64) -> Result<Vec<Rational>, ProbeError> {
    if h == 0 {
        return Err(ProbeError::InvalidParameter("height must be at least 1".into()));
    }
    if h > MAX_HEIGHT {
        return Err(ProbeError::InvalidParameter(format!("height above {MAX_HEIGHT}")));
    }
    let mut out = vec![Rational::zero()];
    for k in 1..=h as i64 {
        let mut level = Vec::new();
        for q in 1..=k {
            if q.gcd(&k) == 1 {
                // numerator k, denominator q
                level.push(Rational::new(k, q).expect("q >= 1"));
                level.push(Rational::new(-k, q).expect("q >= 1"));
            }
        }
        for p in 1..k {
            if p.gcd(&k) == 1 {
                level.push(Rational::new(p, k).expect("k >= 1"));
                level.push(Rational::new(-p, k).expect("k >= 1"));
            }
        }
        level.sort();
        out.extend(level);
    }
    Ok(out)
}

/// The curve `g(x) = c y^w`; `c = 1` is untwisted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    pub g: UniPoly,
    pub c: Rational,
    pub w: u32,
}

impl CurveSpec {
    pub fn new(g: UniPoly, c: Rational, w: u32) -> Result<Self, ProbeError> {
        if c.is_zero() {
            return Err(ProbeError::InvalidParameter("twist constant must be nonzero".into()));
        }
        if w < 2 {
            return Err(ProbeError::InvalidParameter("exponent must be at least 2".into()));
        }
        Ok(CurveSpec { g, c, w })
    }
}

/// Points `(x, y)` on the curve with `x` of height at most `H`, in the
/// enumeration order of [`enumerate_rationals_by_height`]. For even `w` only
/// the non-negative `y` is listed.
pub fn curve_points_bounded_height(spec: &CurveSpec, h: u64) -> Result<Vec<(Rational, Rational)>, ProbeError> {
    let xs = enumerate_rationals_by_height(h)?;
    Ok(xs
        .into_par_iter()
        .filter_map(|x| {
            let v = &spec.g.eval(&x) / &spec.c;
            rational_wth_root(&v, spec.w).map(|y| (x, y))
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusChoice {
    /// Prime exponent.
    pub w: u32,
    /// `(v - 1)(w - 1) / 2`.
    pub genus: Rational,
    /// Number of distinct roots of `g`.
    pub v: usize,
    /// `v > 1` and genus at least 2.
    pub faltings: bool,
}

/// Smallest prime `w >= max(deg g, 5)` coprime to `w - deg g` and to every
/// root multiplicity of `g`, with the genus of `g(x) = y^w`.
pub fn choose_exponent_and_genus(g: &UniPoly) -> Result<GenusChoice, ProbeError> {
    let d = g.deg() as u32;
    if d == 0 {
        return Err(ProbeError::ConstantPolynomial);
    }
    let mults = g.root_multiplicities();
    let v = g.distinct_root_count();
    let w = (d.max(5)..)
        .filter(|&w| is_prime(w))
        .find(|&w| w.gcd(&(w - d)) == 1 && mults.iter().all(|&a| w.gcd(&a) == 1))
        .expect("primes above the degree and all multiplicities qualify");
    let genus = Rational::new((v as i64 - 1) * (w as i64 - 1), 2).expect("nonzero denominator");
    let faltings = v > 1 && genus >= Rational::from(2);
    Ok(GenusChoice { w, genus, v, faltings })
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}
