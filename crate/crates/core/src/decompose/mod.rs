//! Structural detectors for the non-expander normal forms and the classifier
//! built on them.
//!
//! Every result type re-checks its recomposition against the input when it
//! is constructed, so holding a value is proof that the decomposition is
//! exact.

mod additive;
mod classify;
mod diagnostics;
mod linear;
mod linsolve;
mod multiplicative;
mod power_product;
mod report;

use thiserror::Error;

use crate::poly::{PolyError, Polynomial, UniPoly};
use crate::rational::Rational;

pub use additive::detect_additive_form;
pub use classify::{
    classify, classify_homogeneous, Certificate, ClassificationVerdict, HomogeneousVerdict,
    RationalVerdict, RealVerdict,
};
pub use diagnostics::{diagnostic_probes, Finding, FindingKind};
pub use linear::detect_linear_form;
pub use multiplicative::detect_multiplicative_form;
pub use power_product::detect_power_product_form;
pub use report::{CertificateDocument, InnerCheckDocument, VerdictDocument};

pub use crate::poly::extract_outer_by_peeling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("classification needs 2 or 3 variables, got {0}")]
    UnsupportedArity(usize),
    #[error("input polynomial is constant")]
    ConstantInput,
    #[error("input polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("candidate decomposition does not recompose to the input")]
    RecompositionFailed,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `f(w)` by Horner's rule.
pub fn apply_outer(f: &UniPoly, w: &Polynomial) -> Polynomial {
    let arity = w.arity();
    let mut acc = Polynomial::zero(arity);
    for c in f.coeffs().iter().rev() {
        acc = &(&acc * w) + &Polynomial::constant(arity, c.clone());
    }
    acc
}

fn check(input: &Polynomial, recomposed: Polynomial) -> Result<(), DecomposeError> {
    if *input == recomposed {
        Ok(())
    } else {
        Err(DecomposeError::RecompositionFailed)
    }
}

/// `F = f(c_1 x_1 + ... + c_n x_n)`; the first nonzero coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormResult {
    outer: UniPoly,
    coeffs: Vec<Rational>,
}

impl LinearFormResult {
    pub fn new(input: &Polynomial, outer: UniPoly, coeffs: Vec<Rational>) -> Result<Self, DecomposeError> {
        if coeffs.len() != input.arity() {
            return Err(PolyError::ArityMismatch {
                expected: input.arity(),
                found: coeffs.len(),
            }
            .into());
        }
        let r = LinearFormResult { outer, coeffs };
        check(input, r.recompose())?;
        Ok(r)
    }

    pub fn outer(&self) -> &UniPoly {
        &self.outer
    }

    /// `(1, a[, b])` in the usual case.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn linear_form(&self) -> Polynomial {
        let n = self.coeffs.len();
        let mut l = Polynomial::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            l += &Polynomial::var(n, i).scale(c);
        }
        l
    }

    pub fn recompose(&self) -> Polynomial {
        apply_outer(&self.outer, &self.linear_form())
    }
}

/// `F = f((x_1 + a_1)^e_1 ... (x_n + a_n)^e_n)` with `gcd(e) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerProductResult {
    outer: UniPoly,
    shifts: Vec<Rational>,
    exponents: Vec<u32>,
}

impl PowerProductResult {
    pub fn new(
        input: &Polynomial,
        outer: UniPoly,
        shifts: Vec<Rational>,
        exponents: Vec<u32>,
    ) -> Result<Self, DecomposeError> {
        if shifts.len() != input.arity() || exponents.len() != input.arity() {
            return Err(PolyError::ArityMismatch {
                expected: input.arity(),
                found: shifts.len().min(exponents.len()),
            }
            .into());
        }
        if exponents.iter().any(|&e| e == 0)
            || exponents.iter().fold(0, |g, &e| num_integer::gcd(g, e)) != 1
        {
            return Err(DecomposeError::RecompositionFailed);
        }
        let r = PowerProductResult {
            outer,
            shifts,
            exponents,
        };
        check(input, r.recompose())?;
        Ok(r)
    }

    pub fn outer(&self) -> &UniPoly {
        &self.outer
    }

    /// `a_i` in `(x_i + a_i)`.
    pub fn shifts(&self) -> &[Rational] {
        &self.shifts
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn arity(&self) -> usize {
        self.shifts.len()
    }

    /// Sum of the exponents.
    pub fn exponent_sum(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn inner(&self) -> Polynomial {
        let n = self.arity();
        let mut w = Polynomial::one(n);
        for (i, (a, &e)) in self.shifts.iter().zip(&self.exponents).enumerate() {
            let lin = &Polynomial::var(n, i) + &Polynomial::constant(n, a.clone());
            w = &w * &lin.pow(e);
        }
        w
    }

    pub fn recompose(&self) -> Polynomial {
        apply_outer(&self.outer, &self.inner())
    }
}

/// Degree and root data for one inner polynomial of an additive form, as
/// needed by the case-(ii) constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerCheck {
    pub degree: usize,
    pub distinct_roots: usize,
    pub zero_constant: bool,
    /// `g = c (x - r)^m + k` for some rational `r`, `k`: every base-point
    /// normalization `g(x + x0) - g(x0)` is then a pure power.
    pub shifted_pure_power: bool,
}

impl InnerCheck {
    pub fn of(g: &UniPoly) -> Self {
        let degree = g.deg();
        let distinct_roots = if g.is_zero() { 0 } else { g.distinct_root_count() };
        let shifted_pure_power = match degree {
            0 => false,
            1 => true,
            _ => g.derivative().linear_power_test().is_some(),
        };
        InnerCheck {
            degree,
            distinct_roots,
            zero_constant: g.coeff(0).is_zero(),
            shifted_pure_power,
        }
    }

    /// Degree at least three, no constant term, at least two distinct roots
    /// under every base-point normalization.
    pub fn satisfies_case_ii(&self) -> bool {
        self.degree >= 3 && self.zero_constant && self.distinct_roots >= 2 && !self.shifted_pure_power
    }
}

/// `F = f(g_1(x_1) + ... + g_n(x_n))`, each `g_i` with zero constant and `g_1` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveFormResult {
    outer: UniPoly,
    inners: Vec<UniPoly>,
    checks: Vec<InnerCheck>,
}

impl AdditiveFormResult {
    pub fn new(input: &Polynomial, outer: UniPoly, inners: Vec<UniPoly>) -> Result<Self, DecomposeError> {
        if inners.len() != input.arity() {
            return Err(PolyError::ArityMismatch {
                expected: input.arity(),
                found: inners.len(),
            }
            .into());
        }
        if inners.iter().any(|g| !g.coeff(0).is_zero()) {
            return Err(DecomposeError::RecompositionFailed);
        }
        let checks = inners.iter().map(InnerCheck::of).collect();
        let r = AdditiveFormResult {
            outer,
            inners,
            checks,
        };
        check(input, r.recompose())?;
        Ok(r)
    }

    pub fn outer(&self) -> &UniPoly {
        &self.outer
    }

    pub fn inners(&self) -> &[UniPoly] {
        &self.inners
    }

    pub fn checks(&self) -> &[InnerCheck] {
        &self.checks
    }

    pub fn arity(&self) -> usize {
        self.inners.len()
    }

    pub fn satisfies_case_ii(&self) -> bool {
        self.checks.iter().all(InnerCheck::satisfies_case_ii)
    }

    pub fn inner_sum(&self) -> Polynomial {
        let n = self.arity();
        let mut w = Polynomial::zero(n);
        for (i, g) in self.inners.iter().enumerate() {
            w += &g.to_poly(n, i);
        }
        w
    }

    pub fn recompose(&self) -> Polynomial {
        apply_outer(&self.outer, &self.inner_sum())
    }
}

/// `F = f(g_1(x_1) ... g_n(x_n))`, each `g_i` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeFormResult {
    outer: UniPoly,
    inners: Vec<UniPoly>,
}

impl MultiplicativeFormResult {
    pub fn new(input: &Polynomial, outer: UniPoly, inners: Vec<UniPoly>) -> Result<Self, DecomposeError> {
        if inners.len() != input.arity() {
            return Err(PolyError::ArityMismatch {
                expected: input.arity(),
                found: inners.len(),
            }
            .into());
        }
        let r = MultiplicativeFormResult { outer, inners };
        check(input, r.recompose())?;
        Ok(r)
    }

    pub fn outer(&self) -> &UniPoly {
        &self.outer
    }

    pub fn inners(&self) -> &[UniPoly] {
        &self.inners
    }

    pub fn arity(&self) -> usize {
        self.inners.len()
    }

    pub fn inner_product(&self) -> Polynomial {
        let n = self.arity();
        let mut w = Polynomial::one(n);
        for (i, g) in self.inners.iter().enumerate() {
            w = &w * &g.to_poly(n, i);
        }
        w
    }

    pub fn recompose(&self) -> Polynomial {
        apply_outer(&self.outer, &self.inner_product())
    }
}

/// Smallest non-negative integer at which `g` does not vanish.
pub(crate) fn nonvanishing_point(g: &UniPoly) -> Rational {
    (0i64..)
        .map(Rational::from)
        .find(|t| !g.eval(t).is_zero())
        .expect("a nonzero polynomial has finitely many roots")
}
