use serde::{Deserialize, Serialize};

use crate::parser::format_polynomial;
use crate::poly::UniPoly;
use crate::rational::Rational;

use super::classify::{Certificate, ClassificationVerdict, RationalVerdict, RealVerdict};
use super::diagnostics::Finding;
use super::InnerCheck;

/// Serializable form of a [`ClassificationVerdict`]. Polynomials are in
/// canonical text: the outer in `t`, each inner in its own variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDocument {
    #[serde(rename = "over_Q")]
    pub over_q: String,
    #[serde(rename = "over_R")]
    pub over_r: String,
    /// The rational certificate when there is one, else the real one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<CertificateDocument>,
    pub diagnostics: Vec<Finding>,
    pub active_variables: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub form: String,
    pub f: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub inners: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coefficients: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shifts: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exponents: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inner_checks: Option<Vec<InnerCheckDocument>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerCheckDocument {
    pub degree: usize,
    pub distinct_roots: usize,
    pub zero_constant: bool,
    pub shifted_pure_power: bool,
    pub meets_case_ii: bool,
}

impl From<&InnerCheck> for InnerCheckDocument {
    fn from(c: &InnerCheck) -> Self {
        InnerCheckDocument {
            degree: c.degree,
            distinct_roots: c.distinct_roots,
            zero_constant: c.zero_constant,
            shifted_pure_power: c.shifted_pure_power,
            meets_case_ii: c.satisfies_case_ii(),
        }
    }
}

fn uni_text(p: &UniPoly, var: &str) -> String {
    format_polynomial(&p.to_poly(1, 0), &[var])
}

impl CertificateDocument {
    /// `names` are the names of the certificate's own variables.
    pub fn new<S: AsRef<str>>(cert: &Certificate, names: &[S]) -> Self {
        let inner_texts = |inners: &[UniPoly]| -> Vec<String> {
            inners
                .iter()
                .zip(names)
                .map(|(g, v)| uni_text(g, v.as_ref()))
                .collect()
        };
        let mut doc = CertificateDocument {
            form: cert.form_name().to_string(),
            f: uni_text(cert.outer(), "t"),
            inners: Vec::new(),
            coefficients: None,
            shifts: None,
            exponents: None,
            inner_checks: None,
        };
        match cert {
            Certificate::Linear(r) => doc.coefficients = Some(r.coeffs().to_vec()),
            Certificate::PowerProduct(r) => {
                doc.shifts = Some(r.shifts().to_vec());
                doc.exponents = Some(r.exponents().to_vec());
            }
            Certificate::Additive(r) => {
                doc.inners = inner_texts(r.inners());
                doc.inner_checks = Some(r.checks().iter().map(InnerCheckDocument::from).collect());
            }
            Certificate::Multiplicative(r) => doc.inners = inner_texts(r.inners()),
        }
        doc
    }
}

impl VerdictDocument {
    /// `names` are the input's variable names, one per slot.
    pub fn new<S: AsRef<str>>(v: &ClassificationVerdict, names: &[S]) -> Self {
        let active: Vec<String> = v
            .active_vars
            .iter()
            .map(|&i| names[i].as_ref().to_string())
            .collect();
        let over_q = match &v.over_q {
            RationalVerdict::NonExpander(_) => "non_expander",
            RationalVerdict::ConditionalCaseII(_) => "conditional_case_ii",
            RationalVerdict::Expander => "expander",
        };
        let over_r = match &v.over_r {
            RealVerdict::NonExpander(_) => "non_expander",
            RealVerdict::Expander => "expander",
        };
        let cert = match &v.over_q {
            RationalVerdict::NonExpander(c) => Some(c.clone()),
            RationalVerdict::ConditionalCaseII(a) => Some(Certificate::Additive(a.clone())),
            RationalVerdict::Expander => v.real_certificate().cloned(),
        };
        VerdictDocument {
            over_q: over_q.to_string(),
            over_r: over_r.to_string(),
            certificate: cert.map(|c| CertificateDocument::new(&c, &active)),
            diagnostics: v.diagnostics.clone(),
            active_variables: active,
        }
    }
}
