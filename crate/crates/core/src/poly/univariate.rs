//! Dense univariate polynomials over the rationals.

use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

use super::{Monomial, Polynomial};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

/// `p = scale * (x - root)^power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPower {
    pub scale: Rational,
    pub root: Rational,
    pub power: u32,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `x - a`.
    pub fn linear(a: &Rational) -> Self {
        UniPoly::new(vec![-a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn pow(&self, exp: u32) -> UniPoly {
        let mut result = UniPoly::constant(Rational::one());
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rational::from(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> UniPoly {
        let mut out = vec![Rational::zero()];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / &Rational::from(k as i64 + 1)),
        );
        UniPoly::new(out)
    }

    /// Euclidean division; panics when `d` is zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k + j] -= &t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            // keep coefficient growth in check
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `self(w(x))`.
    pub fn compose(&self, w: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * w) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Monic `p / gcd(p, p')`. Panics on zero.
    pub fn squarefree_part(&self) -> UniPoly {
        assert!(!self.is_zero(), "squarefree part of zero");
        let g = self.gcd(&self.derivative());
        let (q, _) = self.div_rem(&g);
        q.monic()
    }

    pub fn distinct_root_count(&self) -> usize {
        self.squarefree_part().deg()
    }

    /// Yun's square-free decomposition: `p = lc * prod s_k^k` with each `s_k`
    /// monic, squarefree, pairwise coprime. Only nonconstant factors are
    /// returned, paired with their multiplicity.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let d = self.derivative();
        let c = self.gcd(&d);
        let mut w = self.div_rem(&c).0;
        let mut y = d.div_rem(&c).0;
        let mut z = &y - &w.derivative();
        let mut k = 1;
        while w.deg() > 0 {
            let g = w.gcd(&z);
            if g.deg() > 0 {
                out.push((g.clone(), k));
            }
            w = w.div_rem(&g).0;
            y = z.div_rem(&g).0;
            z = &y - &w.derivative();
            k += 1;
        }
        out
    }

    /// Root multiplicities (with repetition for distinct roots sharing one).
    pub fn root_multiplicities(&self) -> Vec<u32> {
        self.squarefree_decomposition()
            .into_iter()
            .flat_map(|(f, k)| std::iter::repeat(k).take(f.deg()))
            .collect()
    }

    /// `Some` iff `self = c (x - r)^m` with rational `r`, `m >= 1`.
    pub fn linear_power_test(&self) -> Option<LinearPower> {
        let m = self.degree()?;
        if m == 0 {
            return None;
        }
        let sf = self.squarefree_part();
        if sf.deg() != 1 {
            return None;
        }
        let root = -(&sf.coeffs[0] / &sf.coeffs[1]);
        let scale = self.leading_coeff();
        let candidate = UniPoly::linear(&root).pow(m as u32).scale(&scale);
        (candidate == *self).then_some(LinearPower {
            scale,
            root,
            power: m as u32,
        })
    }

    /// Embeds into a sparse polynomial in slot `var` of the given arity.
    pub fn to_poly(&self, arity: usize, var: usize) -> Polynomial {
        let mut p = Polynomial::zero(arity);
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut e = vec![0; arity];
            e[var] = k as u32;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }
}

/// Recovers `f` with `f(w(x)) = p(x)` by repeatedly cancelling the leading
/// term of `p` against a power of `w`. Returns `None` when no such `f` exists.
pub fn extract_outer_by_peeling(p: &UniPoly, w: &UniPoly) -> Option<UniPoly> {
    let dw = w.degree().filter(|&d| d >= 1)?;
    if p.is_zero() {
        return Some(UniPoly::zero());
    }
    if p.deg() % dw != 0 {
        return None;
    }
    let top = p.deg() / dw;
    let lw = w.leading_coeff();
    let mut powers = vec![UniPoly::constant(Rational::one())];
    for k in 1..=top {
        let next = &powers[k - 1] * w;
        powers.push(next);
    }
    let mut rem = p.clone();
    let mut outer = vec![Rational::zero(); top + 1];
    while rem.deg() >= 1 {
        let d = rem.deg();
        if d % dw != 0 {
            return None;
        }
        let k = d / dw;
        let c = &rem.leading_coeff() / &lw.pow(k as u32);
        rem = &rem - &powers[k].scale(&c);
        outer[k] = c;
    }
    outer[0] = rem.coeff(0);
    Some(UniPoly::new(outer))
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn peeling_examples() {
        // (x^3+x+2)^2 against x^3+x
        let w = u(&[0, 1, 0, 1]);
        let p = (&w + &u(&[2])).pow(2);
        assert_eq!(extract_outer_by_peeling(&p, &w), Some(u(&[4, 4, 1])));
        // w^3 for an arbitrary w
        let w = u(&[3, -1, 2]);
        assert_eq!(extract_outer_by_peeling(&w.pow(3), &w), Some(u(&[0, 0, 0, 1])));
        // x^4 = (x^2+1)^2 - 2(x^2+1) + 1
        assert_eq!(
            extract_outer_by_peeling(&u(&[0, 0, 0, 0, 1]), &u(&[1, 0, 1])),
            Some(u(&[1, -2, 1]))
        );
    }

    #[test]
    fn peeling_rejects_non_compositions() {
        let w = u(&[0, 0, 1]);
        assert_eq!(extract_outer_by_peeling(&u(&[0, 0, 0, 1]), &w), None);
        assert_eq!(extract_outer_by_peeling(&u(&[0, 1, 0, 0, 1]), &w), None);
        assert_eq!(extract_outer_by_peeling(&u(&[1]), &u(&[5])), None);
        assert_eq!(extract_outer_by_peeling(&u(&[7]), &w), Some(u(&[7])));
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)^2 x
        let f = &(&u(&[-1, 1]).pow(3) * &u(&[2, 1]).pow(2)) * &u(&[0, 1]);
        let mut mult = f.root_multiplicities();
        mult.sort();
        assert_eq!(mult, vec![1, 2, 3]);
        assert_eq!(f.distinct_root_count(), 3);
        assert!(u(&[5]).squarefree_decomposition().is_empty());
    }

    #[test]
    fn division_identity() {
        let a = u(&[3, 0, -2, 5, 1]);
        let b = u(&[1, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.deg() < b.deg() || r.is_zero());
    }

    #[test]
    fn integral_inverts_derivative_up_to_constant() {
        let a = u(&[0, 4, -3, 8]);
        assert_eq!(a.derivative().integral(), a);
    }
}
