//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so two polynomials are
//! equal exactly when their term maps are equal. Monomials compare
//! lexicographically with the first variable most significant
//! (`x > y > z`); the leading term is the largest key and text output lists
//! terms from largest to smallest.

mod gcd;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::Rational;

pub use gcd::multivariate_gcd;
pub use univariate::{extract_outer_by_peeling, LinearPower, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },
    #[error("polynomial is not even in variable {var}")]
    NotEven { var: usize },
    #[error("polynomial depends on more than one variable")]
    NotUnivariate,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Exponent vector; one slot per variable of the owning polynomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Number of variables with a nonzero exponent.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// Binary operations exposed through [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic entry point: arity must agree.
pub fn poly_arith(op: ArithOp, p: &Polynomial, q: &Polynomial) -> Result<Polynomial, PolyError> {
    p.check_arity(q)?;
    Ok(match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
    })
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: impl Into<Rational>) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::one(arity), c.into());
        p
    }

    /// The `index`-th variable. Panics when `index >= arity`.
    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index out of range");
        let mut p = Self::zero(arity);
        p.add_term(Monomial::var(arity, index), Rational::one());
        p
    }

    pub fn monomial(exponents: Vec<u32>, c: impl Into<Rational>) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(Monomial(exponents), c.into());
        p
    }

    /// Sums the given terms; repeated monomials are combined. Panics on an
    /// exponent vector of the wrong length.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading monomial down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.arity])
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Indices of the variables that actually occur.
    pub fn dependent_vars(&self) -> Vec<usize> {
        (0..self.arity).filter(|&v| self.depends_on(v)).collect()
    }

    pub(crate) fn check_arity(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.arity != other.arity {
            return Err(PolyError::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    pub(crate) fn check_var(&self, var: usize) -> Result<(), PolyError> {
        if var >= self.arity {
            return Err(PolyError::VariableOutOfRange {
                index: var,
                arity: self.arity,
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(self.arity);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact value at `point`.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.arity {
            return Err(PolyError::ArityMismatch {
                expected: self.arity,
                found: point.len(),
            });
        }
        let powers: Vec<Vec<Rational>> = (0..self.arity)
            .map(|v| power_table(&point[v], self.degree_in(v).unwrap_or(0)))
            .collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= &powers[v][e as usize];
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes `subs[i]` for variable `i`. Every substitute must share one
    /// arity, which becomes the arity of the result.
    pub fn substitute(&self, subs: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if subs.len() != self.arity {
            return Err(PolyError::ArityMismatch {
                expected: self.arity,
                found: subs.len(),
            });
        }
        let target = match subs.first() {
            Some(s) => s.arity,
            None => return Ok(self.clone()),
        };
        for s in subs {
            if s.arity != target {
                return Err(PolyError::ArityMismatch {
                    expected: target,
                    found: s.arity,
                });
            }
        }
        let powers: Vec<Vec<Polynomial>> = subs
            .iter()
            .enumerate()
            .map(|(v, s)| {
                let top = self.degree_in(v).unwrap_or(0);
                let mut table = vec![Polynomial::one(target)];
                for k in 1..=top as usize {
                    let next = &table[k - 1] * s;
                    table.push(next);
                }
                table
            })
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[v][e as usize];
                }
            }
            out += &t;
        }
        Ok(out)
    }

    /// Replaces variable `var` by `s` (same arity as `self`).
    pub fn compose(&self, var: usize, s: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_var(var)?;
        self.check_arity(s)?;
        let subs: Vec<Polynomial> = (0..self.arity)
            .map(|i| {
                if i == var {
                    s.clone()
                } else {
                    Polynomial::var(self.arity, i)
                }
            })
            .collect();
        self.substitute(&subs)
    }

    /// `p(x + a_1, y + a_2, ...)`.
    pub fn shift(&self, offsets: &[Rational]) -> Result<Polynomial, PolyError> {
        if offsets.len() != self.arity {
            return Err(PolyError::ArityMismatch {
                expected: self.arity,
                found: offsets.len(),
            });
        }
        let subs: Vec<Polynomial> = offsets
            .iter()
            .enumerate()
            .map(|(i, a)| &Polynomial::var(self.arity, i) + &Polynomial::constant(self.arity, a.clone()))
            .collect();
        self.substitute(&subs)
    }

    /// Sets every variable equal; the result is univariate.
    pub fn diagonal(&self) -> Polynomial {
        let t = Polynomial::var(1, 0);
        self.substitute(&vec![t; self.arity])
            .expect("substitutes share arity 1")
    }

    /// Partially evaluates variable `var` at `value`; arity is preserved.
    pub fn specialize(&self, var: usize, value: &Rational) -> Polynomial {
        let top = self.degree_in(var).unwrap_or(0);
        let powers = power_table(value, top);
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[var], 0);
            out.add_term(Monomial(e), c * &powers[k as usize]);
        }
        out
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial, PolyError> {
        self.check_var(var)?;
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &self.terms {
            let k = m.0[var];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[var] -= 1;
            out.add_term(Monomial(e), c * &Rational::from(k as i64));
        }
        Ok(out)
    }

    /// Coefficients of `self` viewed as a polynomial in `var`; entry `k`
    /// multiplies `var^k` and is free of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let top = self.degree_in(var).map_or(0, |d| d as usize + 1);
        let mut out = vec![Polynomial::zero(self.arity); top];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[var], 0);
            out[k as usize].add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Coefficient of the highest power of `var`, a polynomial in the
    /// remaining variables. Returns `self` when `var` does not occur.
    pub fn leading_coeff_in(&self, var: usize) -> Result<Polynomial, PolyError> {
        self.check_var(var)?;
        Ok(self
            .coefficients_in(var)
            .pop()
            .unwrap_or_else(|| Polynomial::zero(self.arity)))
    }

    /// Total degree when every monomial shares it.
    pub fn is_homogeneous(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::total_degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Replaces `x^2` by a fresh variable in each selected slot.
    pub fn even_reduce(&self, vars: &[usize]) -> Result<Polynomial, PolyError> {
        for &v in vars {
            self.check_var(v)?;
        }
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            for &v in vars {
                if e[v] % 2 != 0 {
                    return Err(PolyError::NotEven { var: v });
                }
                e[v] /= 2;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Inverse of [`Polynomial::even_reduce`]: substitutes `u = x^2`.
    pub fn even_expand(&self, vars: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            for &v in vars {
                e[v] *= 2;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Keeps only the listed variable slots, in order. Fails when a dropped
    /// variable occurs.
    pub fn project(&self, vars: &[usize]) -> Result<Polynomial, PolyError> {
        for &v in vars {
            self.check_var(v)?;
        }
        let mut out = Polynomial::zero(vars.len());
        for (m, c) in &self.terms {
            let kept: u32 = vars.iter().map(|&v| m.0[v]).sum();
            if kept != m.total_degree() {
                return Err(PolyError::ArityMismatch {
                    expected: self.arity,
                    found: vars.len(),
                });
            }
            out.add_term(Monomial(vars.iter().map(|&v| m.0[v]).collect()), c.clone());
        }
        Ok(out)
    }

    /// Places variable `i` of `self` into slot `slots[i]` of a polynomial of
    /// arity `arity`.
    pub fn embed(&self, arity: usize, slots: &[usize]) -> Result<Polynomial, PolyError> {
        if slots.len() != self.arity {
            return Err(PolyError::ArityMismatch {
                expected: self.arity,
                found: slots.len(),
            });
        }
        let mut out = Polynomial::zero(arity);
        for &s in slots {
            if s >= arity {
                return Err(PolyError::VariableOutOfRange { index: s, arity });
            }
        }
        for (m, c) in &self.terms {
            let mut e = vec![0; arity];
            for (i, &s) in slots.iter().enumerate() {
                e[s] += m.0[i];
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Rational content: positive `c` such that `self / c` has coprime integer
    /// coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::zero();
        }
        Rational::new(num, den).expect("positive lcm")
    }

    /// Primitive integer coefficients with positive leading coefficient.
    pub fn normalize_primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(Rational::is_negative) {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Exact quotient `self / d`, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.arity);
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.div(&dm)?;
            let c = rc / &dc;
            rem -= &d.mul_monomial(&m, &c);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// The single variable this polynomial depends on, if at most one.
    pub fn univariate_var(&self) -> Result<Option<usize>, PolyError> {
        let deps = self.dependent_vars();
        match deps.len() {
            0 => Ok(None),
            1 => Ok(Some(deps[0])),
            _ => Err(PolyError::NotUnivariate),
        }
    }

    /// Dense form in variable `var`; fails when another variable occurs.
    pub fn to_univariate(&self, var: usize) -> Result<UniPoly, PolyError> {
        self.check_var(var)?;
        let mut coeffs = vec![Rational::zero(); self.degree_in(var).map_or(0, |d| d as usize + 1)];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return Err(PolyError::NotUnivariate);
            }
            coeffs[m.0[var] as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Dense form in whichever single variable occurs (variable 0 when constant).
    pub fn as_univariate(&self) -> Result<(usize, UniPoly), PolyError> {
        let var = self.univariate_var()?.unwrap_or(0);
        Ok((var, self.to_univariate(var)?))
    }

    /// `p / gcd(p, p')`, normalized to primitive integer coefficients.
    pub fn squarefree_part(&self) -> Result<Polynomial, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let (var, u) = self.as_univariate()?;
        Ok(u.squarefree_part().to_poly(self.arity, var).normalize_primitive())
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> Result<u32, PolyError> {
        let sf = self.squarefree_part()?;
        Ok(sf.total_degree().unwrap_or(0))
    }

    /// Decides whether `self = c (x - root)^m` for a rational root.
    pub fn linear_power_test(&self) -> Result<Option<LinearPower>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let (_, u) = self.as_univariate()?;
        Ok(u.linear_power_test())
    }
}

fn power_table(x: &Rational, top: u32) -> Vec<Rational> {
    let mut t = Vec::with_capacity(top as usize + 1);
    t.push(Rational::one());
    for k in 1..=top as usize {
        let next = &t[k - 1] * x;
        t.push(next);
    }
    t
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::parser::default_names(self.arity);
        write!(f, "{}", crate::parser::format_polynomial(self, &names))
    }
}

impl std::ops::AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl std::ops::SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|x| *x += &c)
                    .or_insert(c);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial {
            arity: self.arity,
            terms: acc,
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl std::ops::$trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_with;
    use crate::rational::rat;

    fn p(s: &str) -> Polynomial {
        parse_with(s, &["x", "y", "z"]).unwrap()
    }

    fn p1(s: &str) -> Polynomial {
        parse_with(s, &["x"]).unwrap()
    }

    const EXAMPLE1: &str = "x^2y^2z+x^2y^2+x^2z+x^2-y^2z-y^2-z-1";
    const EXAMPLE2: &str = "x^6+2x^4+2x^3y^3+4x^3+x^2+2xy^3+4x+y^6+4y^3+4";

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
        assert_eq!(p("x+1").pow(2), p("x^2+2x+1"));
        assert_eq!(&(&p("x^2-1") * &p("y^2+1")) * &p("z+1"), p(EXAMPLE1));
        assert_eq!(p(EXAMPLE1).num_terms(), 8);
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let a = Polynomial::var(2, 0);
        let b = Polynomial::var(3, 0);
        assert_eq!(
            poly_arith(ArithOp::Add, &a, &b),
            Err(PolyError::ArityMismatch { expected: 2, found: 3 })
        );
        assert!(a.evaluate(&[Rational::one()]).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let f = p(EXAMPLE1);
        let at = |v: [i64; 3]| f.evaluate(&v.map(Rational::from)).unwrap();
        assert_eq!(at([1, 5, 7]), Rational::zero());
        assert_eq!(at([3, 1, 1]), Rational::from(32));
        let chang = parse_with("x^2+y^2", &["x", "y"]).unwrap();
        assert_eq!(chang.evaluate(&[3.into(), 4.into()]).unwrap(), Rational::from(25));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(EXAMPLE1).diagonal(), p1("x^5+x^4-x-1"));
        assert_eq!(p1("x^2").shift(&[Rational::one()]).unwrap(), p1("x^2+2x+1"));
        let g = p1("x^3");
        let h = &g.shift(&[Rational::one()]).unwrap() - &Polynomial::constant(1, g.evaluate(&[1.into()]).unwrap());
        assert_eq!(h, p1("x^3+3x^2+3x"));
        let c = p("x*y").compose(0, &p("y+z")).unwrap();
        assert_eq!(c, p("y^2+yz"));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x^2y").partial_derivative(0).unwrap(), p("2xy"));
        let e2 = parse_with(EXAMPLE2, &["x", "y"]).unwrap();
        assert_eq!(
            e2.partial_derivative(1).unwrap(),
            parse_with("6x^3y^2+6xy^2+6y^5+12y^2", &["x", "y"]).unwrap()
        );
        assert!(p("7").partial_derivative(0).unwrap().is_zero());
        assert!(p("x").partial_derivative(3).is_err());
    }

    #[test]
    fn squarefree_examples() {
        let f = p1("(x+1)^2(x-2)");
        assert_eq!(f.squarefree_part().unwrap(), p1("x^2-x-2"));
        assert_eq!(f.distinct_root_count().unwrap(), 2);
        assert_eq!(p1("x^5+x^4-x-1").distinct_root_count().unwrap(), 4);
        assert_eq!(p1("2x^3+x+2").distinct_root_count().unwrap(), 3);
        assert_eq!(Polynomial::zero(1).squarefree_part(), Err(PolyError::ZeroPolynomial));
        assert_eq!(p("x+y").squarefree_part(), Err(PolyError::NotUnivariate));
    }

    #[test]
    fn leading_coeff_examples() {
        assert_eq!(p(EXAMPLE1).leading_coeff_in(0).unwrap(), p("y^2z+y^2+z+1"));
        assert_eq!(p("x^2y+xy^2").leading_coeff_in(0).unwrap(), p("y"));
        let e2 = parse_with(EXAMPLE2, &["x", "y"]).unwrap();
        assert_eq!(e2.leading_coeff_in(0).unwrap(), Polynomial::one(2));
    }

    #[test]
    fn linear_power_examples() {
        let y = |s: &str| parse_with(s, &["y"]).unwrap();
        let lp = y("y^2+4y+4").linear_power_test().unwrap().unwrap();
        assert_eq!((lp.scale, lp.root, lp.power), (Rational::one(), Rational::from(-2), 2));
        assert_eq!(y("y^2+1").linear_power_test().unwrap(), None);
        let lp = y("3(y-5)^4").linear_power_test().unwrap().unwrap();
        assert_eq!((lp.scale, lp.root, lp.power), (Rational::from(3), Rational::from(5), 4));
    }

    #[test]
    fn even_reduce_examples() {
        let chang = parse_with("x^2+y^2", &["x", "y"]).unwrap();
        assert_eq!(chang.even_reduce(&[0, 1]).unwrap(), parse_with("x+y", &["x", "y"]).unwrap());
        assert_eq!(
            p(EXAMPLE1).even_reduce(&[0, 1]).unwrap(),
            p("(x-1)(y+1)(z+1)")
        );
        assert_eq!(p1("x^3+x").even_reduce(&[0]), Err(PolyError::NotEven { var: 0 }));
    }

    #[test]
    fn homogeneity_examples() {
        assert_eq!(p("xyz").is_homogeneous(), Some(3));
        assert_eq!(p("(x+2y)^3").is_homogeneous(), Some(3));
        assert_eq!(p("x^2+y").is_homogeneous(), None);
    }

    #[test]
    fn exact_division() {
        let a = p("x^2-y^2");
        assert_eq!(a.div_exact(&p("x-y")), Some(p("x+y")));
        assert_eq!(a.div_exact(&p("x-z")), None);
        assert_eq!(a.div_exact(&Polynomial::constant(3, rat(1, 2))), Some(p("2x^2-2y^2")));
    }

    #[test]
    fn projection_and_embedding() {
        let q = p("y^2+z");
        let proj = q.project(&[1, 2]).unwrap();
        assert_eq!(proj, parse_with("x^2+y", &["x", "y"]).unwrap());
        assert_eq!(proj.embed(3, &[1, 2]).unwrap(), q);
        assert!(q.project(&[0, 1]).is_err());
    }
}
