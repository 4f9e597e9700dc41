//! Point configurations of the generic fiber: the d points in P^{d-2} cut
//! out by the trace-dual of a reduced basis, the quadrics through them,
//! their graded syzygies and the d = 3 cubic form.

mod config;
mod cubic;
mod forms;
mod quadrics;
mod resolution;

pub use config::{point_config, specialized_points, PointConfigData, SpecializedPoints};
pub use cubic::{cubic_form_d3, cubic_form_vanishes, BinaryCubic};
pub use forms::Monomials;
pub use quadrics::{
    graded_quadric_degrees, pencil_cubic, pencil_matches_cubic_resolvent, perturbed, quadric_space,
    verify_point_vanishing, QuadricSet,
};
pub use resolution::{relative_resolution, RelativeResolution, Syzygy};

use thiserror::Error;

use crate::exactalg::AlgError;
use crate::funfield::FunError;
use crate::predict::PredictError;
use crate::resolvent::ResolventError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BhargavaError {
    #[error("degree {d} not supported here (need {need})")]
    Degree { d: usize, need: &'static str },
    #[error("quadric space has dimension {got}, expected {expected}")]
    QuadricDimension { got: usize, expected: usize },
    #[error("shift sum {got} differs from the predicted {expected} at step {step}")]
    SumMismatch { step: usize, got: i64, expected: i64 },
    #[error("step {step} has {got} generators, expected {expected}")]
    BettiMismatch { step: usize, got: usize, expected: usize },
    #[error("shift window [{lo}, {hi}] exhausted at step {step}")]
    WindowExhausted { step: usize, lo: i64, hi: i64 },
    #[error("requested depth {depth} exceeds d-3 = {max}")]
    Depth { depth: usize, max: usize },
    #[error("no admissible specialization found")]
    NoSpecialization,
    #[error(transparent)]
    Fun(#[from] FunError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Predict(#[from] PredictError),
    #[error(transparent)]
    Resolvent(#[from] ResolventError),
}

pub type Result<T> = std::result::Result<T, BhargavaError>;
