//! Degree-d function fields over F_p(t): maximal orders at both patches,
//! genus, reduced bases, ramification and trace-dual bases.

mod elem;
mod hirzebruch;
mod laurent;
mod model;
mod order;
mod ramify;
mod reduce;

pub use elem::{dual_basis, trace_zero_basis, FieldElem, FunctionField};
pub use hirzebruch::{generate_hirzebruch_model, hirzebruch_curve, hirzebruch_support, monicize};
pub use laurent::Laurent;
pub use model::{CoverModel, IrreducibilityCheck};
pub use order::{maximal_order, Enlargement, OrderBasis, Patch};
pub use ramify::{ramification_report, BranchPlace, Classification, Place, RamificationReport};
pub use reduce::{reduced_basis, Analysis, ReducedBasisResult};

use thiserror::Error;

use crate::exactalg::AlgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FunError {
    #[error("modulus {p} must exceed the degree {d}")]
    WildCharacteristic { p: u64, d: usize },
    #[error("degree in x must be at least 2")]
    DegreeTooSmall,
    #[error("polynomial is not monic in x")]
    NotMonic,
    #[error("discriminant vanishes: polynomial is inseparable")]
    Inseparable,
    #[error("polynomial is reducible or irreducibility could not be certified")]
    Reducible,
    #[error("function field is not geometrically irreducible ({0} constant sections)")]
    NotGeometricallyIrreducible(usize),
    #[error("wild ramification")]
    Wild,
    #[error("discriminant degree parity violated")]
    Parity,
    #[error("certificate failure: {0}")]
    Certificate(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

pub type Result<T> = std::result::Result<T, FunError>;

/// Scrollar invariants of a cover, the full pipeline in one call.
pub fn scrollar_profile(model: &CoverModel) -> Result<crate::predict::ScrollarProfile> {
    Ok(Analysis::new(model)?.reduced_basis()?.profile())
}

/// Genus via both maximal orders.
pub fn genus(model: &CoverModel) -> Result<i64> {
    Ok(Analysis::new(model)?.genus())
}
