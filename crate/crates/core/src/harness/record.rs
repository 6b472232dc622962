use serde::{Deserialize, Serialize};

use crate::parser::{default_names, format_polynomial};
use crate::poly::{PolyError, Polynomial};
use crate::rational::Rational;

use super::image::{count_image, Execution};
use super::sets::{gen_set, SetSpec};
use super::HarnessError;

/// One measured image size. `timestamp` (unix milliseconds) and `seed` are
/// filled in by callers that log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub polynomial: String,
    pub variables: Vec<String>,
    pub sets: Vec<SetSpec>,
    /// Largest set size.
    pub n: usize,
    pub count: u64,
    /// `count / n`.
    pub ratio: Rational,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

/// Turns per-variable set specs into value lists and the polynomial to
/// evaluate on them: variables with square-root sets are even-reduced and
/// take their base values.
pub fn resolve_grid(f: &Polynomial, sets: &[SetSpec]) -> Result<(Polynomial, Vec<Vec<Rational>>), HarnessError> {
    if sets.len() != f.arity() {
        return Err(HarnessError::ArityMismatch {
            expected: f.arity(),
            found: sets.len(),
        });
    }
    let mut even = Vec::new();
    let mut values = Vec::with_capacity(sets.len());
    for (v, spec) in sets.iter().enumerate() {
        match spec {
            SetSpec::EvenSquares(base) => {
                let vals = gen_set(base)?;
                if vals.iter().any(Rational::is_negative) {
                    return Err(HarnessError::NegativeSquare { var: v });
                }
                even.push(v);
                values.push(vals);
            }
            _ => values.push(gen_set(spec)?),
        }
    }
    let p = f.even_reduce(&even).map_err(|e| match e {
        PolyError::NotEven { var } => HarnessError::NotEven { var },
        other => other.into(),
    })?;
    Ok((p, values))
}

/// Exact `|F(A_1, ..., A_k)|` with default variable names.
pub fn image_size(f: &Polynomial, sets: &[SetSpec]) -> Result<ExperimentRecord, HarnessError> {
    let names = default_names(f.arity());
    image_size_with(f, &names, sets, Execution::Parallel)
}

pub fn image_size_with<S: AsRef<str>>(
    f: &Polynomial,
    names: &[S],
    sets: &[SetSpec],
    exec: Execution,
) -> Result<ExperimentRecord, HarnessError> {
    let (p, values) = resolve_grid(f, sets)?;
    let count = count_image(&p, &values, exec)?;
    let n = values.iter().map(Vec::len).max().unwrap_or(1);
    Ok(ExperimentRecord {
        polynomial: format_polynomial(f, names),
        variables: names.iter().map(|s| s.as_ref().to_string()).collect(),
        sets: sets.to_vec(),
        n,
        count,
        ratio: Rational::new(count, n as u64).expect("set sizes are positive"),
        timestamp: None,
        seed: None,
    })
}
