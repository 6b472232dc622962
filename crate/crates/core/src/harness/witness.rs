use serde::{Deserialize, Serialize};

use crate::decompose::{Certificate, ClassificationVerdict};
use crate::parser::parse_with;
use crate::poly::{Polynomial, UniPoly};

use super::record::{image_size, ExperimentRecord};
use super::sets::SetSpec;
use super::HarnessError;

/// Sets on which a non-expander takes few values, with a guaranteed bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub sets: Vec<SetSpec>,
    pub bound: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub record: ExperimentRecord,
    pub bound: u64,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// Witness sets for a linear or power-product certificate.
///
/// For `f(c_1 x_1 + ...)` each variable with `c_i != 0` runs over
/// `{1/c_i, 2/c_i, ..., n/c_i}`, so the linear form takes the `k(n-1)+1`
/// integer values between `k` and `kn` (`k` nonzero coefficients). For
/// `f(prod (x_i + a_i)^e_i)` each variable runs over `{2^j - a_i}`, so the
/// product is a power of two with exponent between `sum e_i` and
/// `n sum e_i`; the bound `n sum e_i` covers it.
pub fn witness_for(cert: &Certificate, n: usize) -> Result<Witness, HarnessError> {
    if n == 0 {
        return Err(HarnessError::SizeTooSmall);
    }
    match cert {
        Certificate::Linear(r) => {
            let sets = r
                .coeffs()
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        SetSpec::ap(1, 1, n)
                    } else {
                        let step = c.recip();
                        SetSpec::ap(step.clone(), step, n)
                    }
                })
                .collect();
            let k = r.coeffs().iter().filter(|c| !c.is_zero()).count() as u64;
            Ok(Witness {
                sets,
                bound: k * (n as u64 - 1) + 1,
                note: None,
            })
        }
        Certificate::PowerProduct(r) => {
            let sets = r
                .shifts()
                .iter()
                .map(|a| SetSpec::image(UniPoly::linear(a), SetSpec::gp(2, 2, n)))
                .collect();
            Ok(Witness {
                sets,
                bound: r.exponent_sum() as u64 * n as u64,
                note: None,
            })
        }
        Certificate::Additive(_) | Certificate::Multiplicative(_) => Err(HarnessError::UnsupportedForm),
    }
}

/// [`witness_for`] applied to a verdict's rational certificate, with the
/// sets placed in the input's variable slots. Variables the polynomial does
/// not depend on get `{1, ..., n}`.
pub fn witness_for_verdict(v: &ClassificationVerdict, n: usize) -> Result<Witness, HarnessError> {
    let cert = v.rational_certificate().ok_or(HarnessError::UnsupportedForm)?;
    let w = witness_for(cert, n)?;
    let mut sets = vec![SetSpec::ap(1, 1, n); v.arity];
    for (spec, &slot) in w.sets.into_iter().zip(&v.active_vars) {
        sets[slot] = spec;
    }
    Ok(Witness { sets, ..w })
}

/// Measures `F` on the witness sets and compares with the bound.
pub fn measure_witness(f: &Polynomial, w: &Witness) -> Result<WitnessCheck, HarnessError> {
    let record = image_size(f, &w.sets)?;
    Ok(WitnessCheck {
        holds: record.count <= w.bound,
        bound: w.bound,
        note: w.note.clone(),
        record,
    })
}

/// Sets showing `(x^2-1)(y^2+1)(z+1)` is not an expander over the reals:
/// `x` over square roots of `2^i + 1`, `y` over square roots of `2^j - 1`,
/// `z` over `2^k - 1`, so every value is `2^(i+j+k)`. With `literal` the
/// middle set uses `2^j + 1` instead, which spreads the image to order `n^2`.
pub fn example1_witness(n: usize, literal: bool) -> Result<Witness, HarnessError> {
    if n == 0 {
        return Err(HarnessError::SizeTooSmall);
    }
    let powers = SetSpec::gp(2, 2, n);
    let plus_one = UniPoly::from_ints(&[1, 1]);
    let minus_one = UniPoly::from_ints(&[-1, 1]);
    let middle = if literal { plus_one.clone() } else { minus_one.clone() };
    Ok(Witness {
        sets: vec![
            SetSpec::even_squares(SetSpec::image(plus_one, powers.clone())),
            SetSpec::even_squares(SetSpec::image(middle, powers.clone())),
            SetSpec::image(minus_one, powers),
        ],
        bound: 3 * n as u64,
        note: literal.then(|| {
            "literal sets: y ranges over square roots of 2^j+1, so (y^2+1) = 2^j+2 and the \
             image is not confined to powers of two; the 3n bound is not expected to hold"
                .to_string()
        }),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChangReport {
    pub n: usize,
    pub count: u64,
    pub bound: u64,
    pub holds: bool,
}

/// `x^2 + y^2` on `{1, sqrt 2, ..., sqrt n}` squared: the image is `u + v`
/// over `{1..n}`, of size `2n - 1`.
pub fn chang_check(n: usize) -> Result<ChangReport, HarnessError> {
    if n == 0 {
        return Err(HarnessError::SizeTooSmall);
    }
    let f = parse_with("x^2+y^2", &["x", "y"])?;
    let roots = SetSpec::even_squares(SetSpec::ap(1, 1, n));
    let r = image_size(&f, &[roots.clone(), roots])?;
    let bound = 2 * n as u64;
    Ok(ChangReport {
        n,
        count: r.count,
        bound,
        holds: r.count <= bound,
    })
}
