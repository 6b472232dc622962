//! Brute-force probes on bounded-height points, finitely generated
//! multiplicative groups and progressions in polynomial ranges.

mod group;
mod height;
mod progression;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

pub use group::{
    group_membership, intersection_count, popular_congruence_class, ExponentVector, IntersectionReport,
    MultGroupSpec, MAX_WITNESSES, TRIAL_DIVISION_BOUND,
};
pub use height::{
    choose_exponent_and_genus, curve_points_bounded_height, enumerate_rationals_by_height, rational_wth_root,
    CurveSpec, GenusChoice, MAX_HEIGHT,
};
pub use progression::{
    find_longest_progression, range_progression_probe, squares_no_4ap_check, Domain, Progression,
    ProgressionKind, RangeProbeReport, SquaresReport, MAX_PROGRESSION_VALUES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProbeError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input is empty")]
    EmptyInput,
    #[error("group generators must be nonzero")]
    ZeroGenerator,
    #[error("generator {0} has a prime factor above the trial-division bound")]
    Unfactorable(Rational),
    #[error("{0} values exceed the progression search limit")]
    TooManyValues(usize),
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
}

/// Common JSON envelope for probe output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub probe: String,
    pub parameters: serde_json::Map<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub length: Option<usize>,
    pub witnesses: Vec<serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    /// Wall-clock time; set only when the report is logged, so printed
    /// output is reproducible.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<u64>,
}

impl ProbeReport {
    pub fn new(probe: impl Into<String>) -> Self {
        ProbeReport {
            probe: probe.into(),
            parameters: serde_json::Map::new(),
            count: None,
            length: None,
            witnesses: Vec::new(),
            notes: Vec::new(),
            runtime_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(
            key.to_string(),
            serde_json::to_value(value).expect("parameters serialize"),
        );
        self
    }
}
