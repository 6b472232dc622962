use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::parser::{format_polynomial, parse_with};
use crate::poly::UniPoly;
use crate::rational::Rational;

use super::HarnessError;

/// Largest set `gen_set` will materialize.
pub const MAX_SET_SIZE: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApDims {
    pub start: Rational,
    pub step: Rational,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GpDims {
    pub start: Rational,
    pub ratio: Rational,
    pub count: usize,
}

/// A finite set of rationals described by its construction.
///
/// JSON uses the variant name as the key, e.g.
/// `{"ap":{"start":"1","step":"1","count":5}}` or
/// `{"image":{"g":"x^2+1","base":{"gp":{"start":"2","ratio":"2","count":4}}}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetSpec {
    Ap(ApDims),
    Gp(GpDims),
    /// Sums choosing one element or 0 from each factor.
    Gap(Vec<ApDims>),
    /// Products choosing one element or 1 from each factor.
    Ggp(Vec<GpDims>),
    /// `g(base)` for a univariate `g` written in `x`.
    Image {
        #[serde(with = "uni_text")]
        g: UniPoly,
        base: Box<SetSpec>,
    },
    Explicit(Vec<Rational>),
    /// Square roots of the (non-negative) base values. Never materialized;
    /// evaluation substitutes the base values into the even-reduced
    /// polynomial.
    EvenSquares(Box<SetSpec>),
}

mod uni_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::*;

    pub fn serialize<S: Serializer>(g: &UniPoly, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_polynomial(&g.to_poly(1, 0), &["x"]))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<UniPoly, D::Error> {
        let text = String::deserialize(d)?;
        let p = parse_with(&text, &["x"]).map_err(serde::de::Error::custom)?;
        p.to_univariate(0).map_err(serde::de::Error::custom)
    }
}

impl SetSpec {
    pub fn ap(start: impl Into<Rational>, step: impl Into<Rational>, count: usize) -> Self {
        SetSpec::Ap(ApDims {
            start: start.into(),
            step: step.into(),
            count,
        })
    }

    pub fn gp(start: impl Into<Rational>, ratio: impl Into<Rational>, count: usize) -> Self {
        SetSpec::Gp(GpDims {
            start: start.into(),
            ratio: ratio.into(),
            count,
        })
    }

    pub fn image(g: UniPoly, base: SetSpec) -> Self {
        SetSpec::Image {
            g,
            base: Box::new(base),
        }
    }

    pub fn even_squares(base: SetSpec) -> Self {
        SetSpec::EvenSquares(Box::new(base))
    }

    /// Checks counts, steps and ratios, and that the nominal size is within
    /// [`MAX_SET_SIZE`].
    pub fn validate(&self) -> Result<(), HarnessError> {
        let size = self.nominal_size()?;
        if size > MAX_SET_SIZE {
            return Err(HarnessError::SetTooLarge(size));
        }
        Ok(())
    }

    /// Upper bound on the number of elements, checking invariants on the way.
    fn nominal_size(&self) -> Result<usize, HarnessError> {
        let invalid = |msg: &str| Err(HarnessError::InvalidSpec(msg.to_string()));
        match self {
            SetSpec::Ap(d) => check_ap(d).map(|_| d.count),
            SetSpec::Gp(d) => check_gp(d).map(|_| d.count),
            SetSpec::Gap(dims) => {
                if dims.is_empty() {
                    return invalid("gap needs at least one factor");
                }
                dims.iter().try_fold(1usize, |acc, d| {
                    check_ap(d)?;
                    Ok(acc.saturating_mul(d.count + 1))
                })
            }
            SetSpec::Ggp(dims) => {
                if dims.is_empty() {
                    return invalid("ggp needs at least one factor");
                }
                dims.iter().try_fold(1usize, |acc, d| {
                    check_gp(d)?;
                    Ok(acc.saturating_mul(d.count + 1))
                })
            }
            SetSpec::Image { base, .. } => base.nominal_size(),
            SetSpec::Explicit(values) => {
                if values.is_empty() {
                    return invalid("explicit set is empty");
                }
                Ok(values.len())
            }
            SetSpec::EvenSquares(base) => base.nominal_size(),
        }
    }

    /// The same construction with every progression length set to `n`.
    pub fn with_count(&self, n: usize) -> SetSpec {
        match self {
            SetSpec::Ap(d) => SetSpec::Ap(ApDims { count: n, ..d.clone() }),
            SetSpec::Gp(d) => SetSpec::Gp(GpDims { count: n, ..d.clone() }),
            SetSpec::Gap(dims) => SetSpec::Gap(
                dims.iter()
                    .map(|d| ApDims { count: n, ..d.clone() })
                    .collect(),
            ),
            SetSpec::Ggp(dims) => SetSpec::Ggp(
                dims.iter()
                    .map(|d| GpDims { count: n, ..d.clone() })
                    .collect(),
            ),
            SetSpec::Image { g, base } => SetSpec::image(g.clone(), base.with_count(n)),
            SetSpec::Explicit(_) => self.clone(),
            SetSpec::EvenSquares(base) => SetSpec::even_squares(base.with_count(n)),
        }
    }
}

fn check_ap(d: &ApDims) -> Result<(), HarnessError> {
    if d.count == 0 {
        return Err(HarnessError::InvalidSpec("ap count must be at least 1".into()));
    }
    if d.step.is_zero() {
        return Err(HarnessError::InvalidSpec("ap step must be nonzero".into()));
    }
    Ok(())
}

fn check_gp(d: &GpDims) -> Result<(), HarnessError> {
    if d.count == 0 {
        return Err(HarnessError::InvalidSpec("gp count must be at least 1".into()));
    }
    if d.start.is_zero() {
        return Err(HarnessError::InvalidSpec("gp start must be nonzero".into()));
    }
    if d.ratio.is_zero() || d.ratio.abs().is_one() {
        return Err(HarnessError::InvalidSpec("gp ratio must not be 0, 1 or -1".into()));
    }
    Ok(())
}

fn ap_values(d: &ApDims) -> impl Iterator<Item = Rational> + '_ {
    (0..d.count).map(move |i| &d.start + &(&d.step * &Rational::from(i as i64)))
}

fn gp_values(d: &GpDims) -> impl Iterator<Item = Rational> + '_ {
    std::iter::successors(Some(d.start.clone()), move |v| Some(v * &d.ratio)).take(d.count)
}

/// Materializes a set: distinct values in increasing order.
pub fn gen_set(spec: &SetSpec) -> Result<Vec<Rational>, HarnessError> {
    spec.validate()?;
    Ok(generate(spec)?.into_iter().collect())
}

fn generate(spec: &SetSpec) -> Result<BTreeSet<Rational>, HarnessError> {
    Ok(match spec {
        SetSpec::Ap(d) => ap_values(d).collect(),
        SetSpec::Gp(d) => gp_values(d).collect(),
        SetSpec::Gap(dims) => dims.iter().fold(BTreeSet::from([Rational::zero()]), |acc, d| {
            let factor: Vec<Rational> = std::iter::once(Rational::zero()).chain(ap_values(d)).collect();
            acc.iter()
                .flat_map(|a| factor.iter().map(move |b| a + b))
                .collect()
        }),
        SetSpec::Ggp(dims) => dims.iter().fold(BTreeSet::from([Rational::one()]), |acc, d| {
            let factor: Vec<Rational> = std::iter::once(Rational::one()).chain(gp_values(d)).collect();
            acc.iter()
                .flat_map(|a| factor.iter().map(move |b| a * b))
                .collect()
        }),
        SetSpec::Image { g, base } => generate(base)?.iter().map(|x| g.eval(x)).collect(),
        SetSpec::Explicit(values) => values.iter().cloned().collect(),
        SetSpec::EvenSquares(_) => return Err(HarnessError::IrrationalSet),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetOp {
    Sum,
    Product,
}

/// Exact sumset or productset, distinct values in increasing order.
pub fn pointwise_set_op(op: SetOp, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let out: BTreeSet<Rational> = a
        .iter()
        .flat_map(|x| {
            b.iter().map(move |y| match op {
                SetOp::Sum => x + y,
                SetOp::Product => x * y,
            })
        })
        .collect();
    out.into_iter().collect()
}
