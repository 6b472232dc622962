//! Finite rational sets, exact image sizes and low-expansion witnesses.

mod growth;
mod image;
mod record;
mod sets;
mod witness;

use thiserror::Error;

use crate::parser::ParseError;
use crate::poly::PolyError;

pub use growth::{fiber_inequality_check, growth_sweep, FiberReport, GrowthReport};
pub use image::{count_image, image_values, Execution, MAX_GRID_POINTS};
pub use record::{image_size, image_size_with, resolve_grid, ExperimentRecord};
pub use sets::{gen_set, pointwise_set_op, ApDims, GpDims, SetOp, SetSpec, MAX_SET_SIZE};
pub use witness::{
    chang_check, example1_witness, measure_witness, witness_for, witness_for_verdict, ChangReport,
    Witness, WitnessCheck,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("invalid set: {0}")]
    InvalidSpec(String),
    #[error("set has {0} elements, more than the supported maximum")]
    SetTooLarge(usize),
    #[error("grid has {0} points, more than the supported maximum")]
    GridTooLarge(u128),
    #[error("expected {expected} sets, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("set of square roots cannot be listed as rationals")]
    IrrationalSet,
    #[error("square-root set for variable {var} needs non-negative base values")]
    NegativeSquare { var: usize },
    #[error("polynomial is not even in variable {var}, required by its square-root set")]
    NotEven { var: usize },
    #[error("no additive decomposition supplied or found")]
    MissingDecomposition,
    #[error("witness sets exist only for the linear and power-product forms")]
    UnsupportedForm,
    #[error("size must be at least 1")]
    SizeTooSmall,
    #[error("growth fit needs at least two distinct sizes")]
    TooFewSizes,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
