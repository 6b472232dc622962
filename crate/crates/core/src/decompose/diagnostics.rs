use serde::{Deserialize, Serialize};

use crate::parser::{default_names, format_polynomial};
use crate::poly::{Monomial, Polynomial};

/// Advisory evidence attached to a verdict. Findings explain, they never
/// decide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub kind: FindingKind,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    MissingTopMonomial,
    MixedTerms,
    DiagonalRoots,
    InnerConstraint,
}

const MAX_LISTED_MONOMIALS: usize = 10;

/// Missing top-degree monomials, presence of mixed terms and the number of
/// distinct roots of `F(x, x, x)`.
pub fn diagnostic_probes(f: &Polynomial) -> Vec<Finding> {
    let names = default_names(f.arity());
    let mut out = Vec::new();
    let Some(d) = f.total_degree() else {
        return out;
    };

    let missing: Vec<Monomial> = monomials_of_degree(f.arity(), d)
        .into_iter()
        .filter(|m| f.coeff(m.exponents()).is_zero())
        .collect();
    for m in missing.iter().take(MAX_LISTED_MONOMIALS) {
        out.push(Finding {
            kind: FindingKind::MissingTopMonomial,
            message: format!("degree-{d} monomial {} absent", monomial_text(m, &names)),
        });
    }
    if missing.len() > MAX_LISTED_MONOMIALS {
        out.push(Finding {
            kind: FindingKind::MissingTopMonomial,
            message: format!(
                "{} further degree-{d} monomials absent",
                missing.len() - MAX_LISTED_MONOMIALS
            ),
        });
    }

    let mixed = f.terms().find(|(m, _)| m.support_size() >= 2);
    out.push(Finding {
        kind: FindingKind::MixedTerms,
        message: match mixed {
            Some((m, _)) => format!("mixed terms present (e.g. {})", monomial_text(m, &names)),
            None => "no mixed terms".to_string(),
        },
    });

    let diag = f.diagonal();
    out.push(Finding {
        kind: FindingKind::DiagonalRoots,
        message: if diag.is_constant() {
            "diagonal is constant".to_string()
        } else {
            let roots = diag.distinct_root_count().expect("diagonal is univariate and nonzero");
            let noun = if roots == 1 { "root" } else { "roots" };
            format!("diagonal has {roots} distinct {noun}")
        },
    });
    out
}

/// Exponent vectors of total degree `d`, in descending lex order.
fn monomials_of_degree(arity: usize, d: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(left);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, left - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if arity > 0 {
        rec(&mut Vec::new(), d, arity, &mut out);
    }
    out
}

fn monomial_text(m: &Monomial, names: &[String]) -> String {
    format_polynomial(&Polynomial::monomial(m.exponents().to_vec(), 1), names)
}
