use crate::poly::{Polynomial, UniPoly};
use crate::rational::Rational;

use super::diagnostics::{diagnostic_probes, Finding, FindingKind};
use super::{
    detect_additive_form, detect_linear_form, detect_multiplicative_form, detect_power_product_form,
    AdditiveFormResult, DecomposeError, LinearFormResult, MultiplicativeFormResult,
    PowerProductResult,
};

/// A verified decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Linear(LinearFormResult),
    PowerProduct(PowerProductResult),
    Additive(AdditiveFormResult),
    Multiplicative(MultiplicativeFormResult),
}

impl Certificate {
    pub fn form_name(&self) -> &'static str {
        match self {
            Certificate::Linear(_) => "linear",
            Certificate::PowerProduct(_) => "power_product",
            Certificate::Additive(_) => "additive",
            Certificate::Multiplicative(_) => "multiplicative",
        }
    }

    pub fn outer(&self) -> &UniPoly {
        match self {
            Certificate::Linear(r) => r.outer(),
            Certificate::PowerProduct(r) => r.outer(),
            Certificate::Additive(r) => r.outer(),
            Certificate::Multiplicative(r) => r.outer(),
        }
    }

    pub fn recompose(&self) -> Polynomial {
        match self {
            Certificate::Linear(r) => r.recompose(),
            Certificate::PowerProduct(r) => r.recompose(),
            Certificate::Additive(r) => r.recompose(),
            Certificate::Multiplicative(r) => r.recompose(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalVerdict {
    /// Form (i) or (iii): low-expansion sets exist.
    NonExpander(Certificate),
    /// Only the additive form with inners meeting every constraint of case
    /// (ii) is available; expansion is undecided.
    ConditionalCaseII(AdditiveFormResult),
    Expander,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealVerdict {
    NonExpander(Certificate),
    Expander,
}

/// Outcome of [`classify`]. Certificates are stated over the active
/// variables only; [`ClassificationVerdict::lift`] maps them back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub over_q: RationalVerdict,
    pub over_r: RealVerdict,
    pub diagnostics: Vec<Finding>,
    /// Input variable slots the polynomial depends on, in order.
    pub active_vars: Vec<usize>,
    pub arity: usize,
}

impl ClassificationVerdict {
    pub fn rational_certificate(&self) -> Option<&Certificate> {
        match &self.over_q {
            RationalVerdict::NonExpander(c) => Some(c),
            _ => None,
        }
    }

    pub fn real_certificate(&self) -> Option<&Certificate> {
        match &self.over_r {
            RealVerdict::NonExpander(c) => Some(c),
            RealVerdict::Expander => None,
        }
    }

    /// Embeds a polynomial over the active variables into the input arity.
    pub fn lift(&self, p: &Polynomial) -> Result<Polynomial, DecomposeError> {
        Ok(p.embed(self.arity, &self.active_vars)?)
    }
}

/// Classifies `F` against the non-expander forms over the rationals and over
/// the reals.
///
/// Variables that do not occur are dropped first, so the detectors see a
/// polynomial depending on every variable. Over the rationals the linear and
/// power-product forms certify non-expansion; an additive form whose inners
/// all meet the case-(ii) constraints leaves the question open; anything else
/// is an expander. Over the reals any of the four forms certifies
/// non-expansion.
pub fn classify(f: &Polynomial) -> Result<ClassificationVerdict, DecomposeError> {
    let arity = f.arity();
    if !(2..=3).contains(&arity) {
        return Err(DecomposeError::UnsupportedArity(arity));
    }
    if f.is_constant() {
        return Err(DecomposeError::ConstantInput);
    }
    let active_vars = f.dependent_vars();
    let g = f.project(&active_vars)?;
    let mut diagnostics = diagnostic_probes(f);

    let linear = detect_linear_form(&g);
    let power = detect_power_product_form(&g);
    let additive = detect_additive_form(&g);
    let multiplicative = detect_multiplicative_form(&g);

    if let Some(a) = &additive {
        let names = ["g", "h", "u"];
        let var_names = crate::parser::default_names(arity);
        for ((inner, check), &slot) in a.inners().iter().zip(a.checks()).zip(&active_vars) {
            if check.satisfies_case_ii() {
                continue;
            }
            let text = crate::parser::format_polynomial(&inner.to_poly(1, 0), &var_names[slot..=slot]);
            let mut reasons = Vec::new();
            if check.degree < 3 {
                reasons.push(format!("degree {}", check.degree));
            }
            if check.distinct_roots < 2 {
                let noun = if check.distinct_roots == 1 { "root" } else { "roots" };
                reasons.push(format!("{} distinct {noun}", check.distinct_roots));
            } else if check.shifted_pure_power {
                reasons.push("a shifted pure power".to_string());
            }
            diagnostics.push(Finding {
                kind: FindingKind::InnerConstraint,
                message: format!(
                    "inner {} = {text} has {}",
                    names[slot.min(2)],
                    reasons.join(" and ")
                ),
            });
        }
    }

    let over_r = if let Some(a) = &additive {
        RealVerdict::NonExpander(Certificate::Additive(a.clone()))
    } else if let Some(m) = &multiplicative {
        RealVerdict::NonExpander(Certificate::Multiplicative(m.clone()))
    } else if let Some(l) = &linear {
        RealVerdict::NonExpander(Certificate::Linear(l.clone()))
    } else if let Some(p) = &power {
        RealVerdict::NonExpander(Certificate::PowerProduct(p.clone()))
    } else {
        RealVerdict::Expander
    };

    let over_q = if let Some(l) = linear {
        RationalVerdict::NonExpander(Certificate::Linear(l))
    } else if let Some(p) = power {
        RationalVerdict::NonExpander(Certificate::PowerProduct(p))
    } else {
        match additive {
            Some(a) if a.satisfies_case_ii() => RationalVerdict::ConditionalCaseII(a),
            _ => RationalVerdict::Expander,
        }
    };

    Ok(ClassificationVerdict {
        over_q,
        over_r,
        diagnostics,
        active_vars,
        arity,
    })
}

/// Verdict for homogeneous inputs, where only two shapes survive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomogeneousVerdict {
    /// `F = a (c_1 x_1 + ... + c_n x_n)^alpha`, first nonzero `c_i` equal to 1.
    LinearPower {
        a: Rational,
        coeffs: Vec<Rational>,
        alpha: u32,
    },
    /// `F = a (x^e_1 y^e_2 z^e_3)^k` with `gcd(e) = 1`; variables that do not
    /// occur have exponent 0.
    MonomialPower {
        a: Rational,
        exponents: Vec<u32>,
        k: u32,
    },
    Expander,
}

/// Decides a homogeneous `F` against `a (x + b y + c z)^alpha` and monomial
/// powers such as `a (xyz)^alpha`.
pub fn classify_homogeneous(f: &Polynomial) -> Result<HomogeneousVerdict, DecomposeError> {
    let arity = f.arity();
    if !(2..=3).contains(&arity) {
        return Err(DecomposeError::UnsupportedArity(arity));
    }
    if f.is_constant() {
        return Err(DecomposeError::ConstantInput);
    }
    f.is_homogeneous().ok_or(DecomposeError::NotHomogeneous)?;

    if let Some(l) = detect_linear_form(f) {
        if let Some((a, alpha)) = single_power(l.outer()) {
            return Ok(HomogeneousVerdict::LinearPower {
                a,
                coeffs: l.coeffs().to_vec(),
                alpha,
            });
        }
    }

    let active = f.dependent_vars();
    if active.len() >= 2 {
        if let Some(p) = detect_power_product_form(&f.project(&active)?) {
            if let Some((a, k)) = single_power(p.outer()) {
                if p.shifts().iter().all(Rational::is_zero) {
                    let mut exponents = vec![0; arity];
                    for (&slot, &e) in active.iter().zip(p.exponents()) {
                        exponents[slot] = e;
                    }
                    return Ok(HomogeneousVerdict::MonomialPower { a, exponents, k });
                }
            }
        }
    }
    Ok(HomogeneousVerdict::Expander)
}

/// `(a, k)` when `f = a t^k`.
fn single_power(f: &UniPoly) -> Option<(Rational, u32)> {
    let k = f.degree()?;
    f.coeffs()[..k]
        .iter()
        .all(Rational::is_zero)
        .then(|| (f.leading_coeff(), k as u32))
}
