use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::poly::UniPoly;
use crate::rational::{common_denominator, Rational};

use super::height::enumerate_rationals_by_height;
use super::ProbeError;

/// Generators are factored by trial division up to this bound.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Witnesses kept by [`intersection_count`].
pub const MAX_WITNESSES: usize = 20;

/// `sign * prod p_i^e_i` over a prime basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentVector {
    pub exponents: Vec<i64>,
    pub sign: i8,
}

impl ExponentVector {
    /// Factors a nonzero `r` over `basis`; `None` when another prime divides
    /// its numerator or denominator.
    pub fn of(r: &Rational, basis: &[u64]) -> Option<Self> {
        if r.is_zero() {
            return None;
        }
        let mut num = r.numer().abs();
        let mut den = r.denom().clone();
        let exponents = basis
            .iter()
            .map(|&p| {
                let p = BigInt::from(p);
                strip(&mut num, &p) - strip(&mut den, &p)
            })
            .collect();
        (num.is_one() && den.is_one()).then(|| ExponentVector {
            exponents,
            sign: if r.is_negative() { -1 } else { 1 },
        })
    }

    pub fn value(&self, basis: &[u64]) -> Rational {
        let v: Rational = basis
            .iter()
            .zip(&self.exponents)
            .map(|(&p, &e)| Rational::from(BigInt::from(p)).powi(e))
            .product();
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }
}

fn strip(n: &mut BigInt, p: &BigInt) -> i64 {
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        *n = q;
        k += 1;
    }
}

/// A finitely generated subgroup of the nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultGroupSpec {
    generators: Vec<Rational>,
    basis: Vec<u64>,
    vectors: Vec<ExponentVector>,
}

impl MultGroupSpec {
    pub fn new(generators: Vec<Rational>) -> Result<Self, ProbeError> {
        let mut basis = Vec::new();
        for g in &generators {
            if g.is_zero() {
                return Err(ProbeError::ZeroGenerator);
            }
            for part in [g.numer().abs(), g.denom().clone()] {
                basis.extend(small_prime_factors(&part).ok_or_else(|| ProbeError::Unfactorable(g.clone()))?);
            }
        }
        basis.sort_unstable();
        basis.dedup();
        let vectors = generators
            .iter()
            .map(|g| ExponentVector::of(g, &basis).expect("basis covers every generator"))
            .collect();
        Ok(MultGroupSpec {
            generators,
            basis,
            vectors,
        })
    }

    pub fn generators(&self) -> &[Rational] {
        &self.generators
    }

    /// Sorted primes dividing some generator.
    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    /// Whether some generator is negative.
    pub fn has_sign(&self) -> bool {
        self.vectors.iter().any(|v| v.sign < 0)
    }
}

/// Distinct prime factors, or `None` when one exceeds the trial-division
/// bound.
fn small_prime_factors(n: &BigInt) -> Option<Vec<u64>> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while !n.is_one() {
        if d > TRIAL_DIVISION_BOUND {
            return None;
        }
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            // n is prime
            let p = n.to_u64().filter(|&p| p <= TRIAL_DIVISION_BOUND)?;
            out.push(p);
            break;
        }
        if strip(&mut n, &bd) > 0 {
            out.push(d);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    Some(out)
}

/// Exponents `beta` with `prod a_i^beta_i = r`, when `r` lies in the group.
///
/// The prime-exponent equations and a sign parity equation
/// `sum beta_i [a_i < 0] - 2m = [r < 0]` form an integer system, solved by
/// reducing the matrix to lower column-echelon form with unimodular column
/// operations and substituting forward.
pub fn group_membership(r: &Rational, g: &MultGroupSpec) -> Option<Vec<i64>> {
    let target = ExponentVector::of(r, &g.basis)?;
    let s = g.generators.len();
    let k = g.basis.len();
    let mut rows: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            let mut row: Vec<BigInt> = g.vectors.iter().map(|v| BigInt::from(v.exponents[i])).collect();
            row.push(BigInt::zero());
            row
        })
        .collect();
    let mut sign_row: Vec<BigInt> = g
        .vectors
        .iter()
        .map(|v| BigInt::from(u8::from(v.sign < 0)))
        .collect();
    sign_row.push(BigInt::from(-2));
    rows.push(sign_row);
    let mut rhs: Vec<BigInt> = target.exponents.iter().map(|&e| BigInt::from(e)).collect();
    rhs.push(BigInt::from(u8::from(target.sign < 0)));

    let y = solve_integer(rows, &rhs, s + 1)?;
    let beta: Vec<i64> = y[..s].iter().map(|b| b.to_i64()).collect::<Option<_>>()?;
    let check: Rational = g
        .generators
        .iter()
        .zip(&beta)
        .map(|(a, &b)| a.powi(b))
        .product();
    (check == *r).then_some(beta)
}

/// Integer solution of `a x = b` (free variables zero), `None` if none exists.
fn solve_integer(mut a: Vec<Vec<BigInt>>, b: &[BigInt], cols: usize) -> Option<Vec<BigInt>> {
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| (0..cols).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    let col_axpy = |m: &mut Vec<Vec<BigInt>>, dst: usize, q: &BigInt, src: usize| {
        for row in m.iter_mut() {
            let t = q * &row[src];
            row[dst] -= t;
        }
    };
    let col_swap = |m: &mut Vec<Vec<BigInt>>, x: usize, y: usize| {
        for row in m.iter_mut() {
            row.swap(x, y);
        }
    };

    let mut pivots: Vec<Option<usize>> = vec![None; a.len()];
    let mut pc = 0;
    for i in 0..a.len() {
        if pc == cols {
            break;
        }
        for j in pc + 1..cols {
            while !a[i][j].is_zero() {
                let q = a[i][pc].div_floor(&a[i][j]);
                col_axpy(&mut a, pc, &q, j);
                col_axpy(&mut u, pc, &q, j);
                col_swap(&mut a, pc, j);
                col_swap(&mut u, pc, j);
            }
        }
        if !a[i][pc].is_zero() {
            pivots[i] = Some(pc);
            pc += 1;
        }
    }

    let mut y = vec![BigInt::zero(); cols];
    for (i, row) in a.iter().enumerate() {
        let partial: BigInt = (0..cols).map(|j| &row[j] * &y[j]).sum();
        let rest = &b[i] - partial;
        match pivots[i] {
            Some(p) => {
                let (q, r) = rest.div_rem(&row[p]);
                if !r.is_zero() {
                    return None;
                }
                y[p] = q;
            }
            None if !rest.is_zero() => return None,
            None => {}
        }
    }
    Some(
        (0..cols)
            .map(|i| (0..cols).map(|j| &u[i][j] * &y[j]).sum())
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionReport {
    pub count: u64,
    /// Up to [`MAX_WITNESSES`] pairs `(x, g(x))`, in enumeration order.
    pub witnesses: Vec<(Rational, Rational)>,
}

/// Counts `x` of height at most `H` with `g(x)` nonzero and in the group.
pub fn intersection_count(g: &UniPoly, group: &MultGroupSpec, h: u64) -> Result<IntersectionReport, ProbeError> {
    let fast = SmallEval::new(g);
    let hits: Vec<(Rational, Rational)> = enumerate_rationals_by_height(h)?
        .into_par_iter()
        .filter_map(|x| {
            if let Some(false) = fast.as_ref().and_then(|e| e.maybe_member(&x, group.basis())) {
                return None;
            }
            let v = g.eval(&x);
            (!v.is_zero() && group_membership(&v, group).is_some()).then_some((x, v))
        })
        .collect();
    Ok(IntersectionReport {
        count: hits.len() as u64,
        witnesses: hits.into_iter().take(MAX_WITNESSES).collect(),
    })
}

/// `g` with integer coefficients `c_k / l`, for machine-word evaluation at
/// `p/q` as `sum c_k p^k q^(d-k) / (l q^d)`.
struct SmallEval {
    coeffs: Vec<i128>,
    l: i128,
}

impl SmallEval {
    fn new(g: &UniPoly) -> Option<Self> {
        let l = common_denominator(g.coeffs());
        let coeffs = g
            .coeffs()
            .iter()
            .map(|c| (c * &Rational::from(l.clone())).to_integer()?.to_i128())
            .collect::<Option<Vec<_>>>()?;
        Some(SmallEval { coeffs, l: l.to_i128()? })
    }

    /// `Some(false)` when `g(x)` is zero or has a prime factor outside
    /// `basis`; `None` on overflow or when `x` is not small.
    fn maybe_member(&self, x: &Rational, basis: &[u64]) -> Option<bool> {
        let p = x.numer().to_i128()?;
        let q = x.denom().to_i128()?;
        let d = self.coeffs.len().checked_sub(1)?;
        let mut num: i128 = 0;
        let mut qpow: i128 = 1;
        for c in self.coeffs[..=d].iter().rev() {
            num = num.checked_mul(p)?.checked_add(c.checked_mul(qpow)?)?;
            qpow = qpow.checked_mul(q)?;
        }
        // num = sum c_k p^k q^(d-k) with qpow = q^(d+1); the denominator is l q^d
        let den = self.l.checked_mul(qpow / q)?;
        if num == 0 {
            return Some(false);
        }
        let c = num.gcd(&den);
        let (mut a, mut b) = ((num / c).unsigned_abs(), (den / c).unsigned_abs());
        for &prime in basis {
            let prime = prime as u128;
            while a % prime == 0 {
                a /= prime;
            }
            while b % prime == 0 {
                b /= prime;
            }
        }
        Some(a == 1 && b == 1)
    }
}

/// Most populous residue class of the vectors modulo `w`, least class on
/// ties, with its size.
pub fn popular_congruence_class(vectors: &[Vec<i64>], w: i64) -> Result<(Vec<i64>, usize), ProbeError> {
    if vectors.is_empty() {
        return Err(ProbeError::EmptyInput);
    }
    if w < 2 {
        return Err(ProbeError::InvalidParameter("modulus must be at least 2".into()));
    }
    let mut classes: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for v in vectors {
        *classes.entry(v.iter().map(|e| e.rem_euclid(w)).collect()).or_default() += 1;
    }
    let best = classes.values().copied().max().expect("nonempty");
    let (class, count) = classes
        .into_iter()
        .find(|&(_, c)| c == best)
        .expect("maximum is attained");
    Ok((class, count))
}
