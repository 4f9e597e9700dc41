//! Resolvent covers of a degree-d cover for subgroups H of S_d, and the
//! per-partition profiles they isolate.

pub mod catalog;
pub mod generic;
pub mod isolate;
pub mod splitting;

use thiserror::Error;

use crate::exactalg::bipoly::BiPoly;
use crate::exactalg::AlgError;
use crate::funfield::{Analysis, CoverModel, FunError};
use crate::predict::{PredictError, ScrollarProfile};
use crate::symrep::{CatalogTag, PermSubgroup, SubgroupSpec, SymError};

pub use catalog::{cubic_resolvent, discriminant_resolvent, pair_sum_resolvent};
pub use generic::{minimal_weights, orbit_monomials, orbit_sum_stabilizer_order, resolvent_generic};
pub use isolate::{isolate_partition_profile, resolvent_scrollars, ProfileTable, ResolventReport};
pub use splitting::SplittingAlgebra;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ResolventError {
    #[error("subgroup of S_{subgroup} used with a degree-{model} model")]
    DegreeMismatch { subgroup: usize, model: usize },
    #[error("generic resolvents are limited to d <= 6 (got {0})")]
    TooLarge(usize),
    #[error("invalid weight vector {0:?}")]
    BadWeights(Vec<u32>),
    #[error("no separating invariant after {0} retries")]
    NotSeparating(usize),
    #[error("square root of the pair-sum resultant failed")]
    SquareRoot,
    #[error("characteristic polynomial is not a perfect power")]
    RootExtraction,
    #[error("discriminant is a square, the alternating resolvent splits")]
    DiscriminantSquare,
    #[error("modulus {0} is too small for this construction")]
    ModulusTooSmall(u64),
    #[error("subtraction infeasible: {0}")]
    Infeasible(String),
    #[error("resolvent of index {index} exceeds the budget of {budget}")]
    OutOfBudget { index: usize, budget: usize },
    #[error("no resolution route for {0}")]
    NoRoute(String),
    #[error(transparent)]
    Fun(#[from] FunError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Predict(#[from] PredictError),
}

pub type Result<T> = std::result::Result<T, ResolventError>;

/// How specializations of the generic invariant are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Evaluator {
    /// Splitting algebra up to d = 5, splitting field above.
    #[default]
    Auto,
    SplittingAlgebra,
    SplittingField,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Identity,
    Discriminant,
    CubicResolvent,
    PairSumResultant,
    Generic { weights: Vec<u32> },
}

#[derive(Clone, Debug)]
pub struct ResolventRequest {
    pub model: CoverModel,
    pub subgroup: SubgroupSpec,
    pub weights: Option<Vec<u32>>,
    pub evaluator: Evaluator,
    pub seed: u64,
    /// Largest index [S_d:H] attempted.
    pub max_index: usize,
}

/// Default cap on the resolvent degree.
pub const MAX_INDEX: usize = 30;

impl ResolventRequest {
    pub fn new(model: &CoverModel, subgroup: SubgroupSpec) -> Self {
        ResolventRequest { model: model.clone(), subgroup, weights: None, evaluator: Evaluator::Auto, seed: 0x7e50, max_index: MAX_INDEX }
    }

    pub fn build(&self) -> Result<ResolventModel> {
        let d = self.model.d();
        let h = self.subgroup.build(d)?;
        if h.index() as usize > self.max_index {
            return Err(ResolventError::OutOfBudget { index: h.index() as usize, budget: self.max_index });
        }
        let special = match (&self.subgroup, &self.weights) {
            (SubgroupSpec::Tag(tag), None) => catalog_model(&self.model, *tag, self.seed)?,
            _ => None,
        };
        let (poly, construction) = match special {
            Some(x) => x,
            None => {
                let (poly, w) =
                    resolvent_generic(&self.model, &h, self.weights.as_deref(), self.evaluator, self.seed)?;
                (poly, Construction::Generic { weights: w })
            }
        };
        Ok(ResolventModel { poly, subgroup: h, label: self.subgroup.label(), construction })
    }
}

fn catalog_model(model: &CoverModel, tag: CatalogTag, seed: u64) -> Result<Option<(BiPoly, Construction)>> {
    Ok(match tag {
        CatalogTag::PointStabilizer => Some((model.poly().clone(), Construction::Identity)),
        CatalogTag::Alternating => Some((discriminant_resolvent(model)?, Construction::Discriminant)),
        CatalogTag::QuarticDihedral => Some((cubic_resolvent(model)?, Construction::CubicResolvent)),
        CatalogTag::PairSum => Some((pair_sum_resolvent(model, seed)?, Construction::PairSumResultant)),
        _ => None,
    })
}

/// The catalog construction for a tag, falling back to the generic
/// invariant for tags without a closed form.
pub fn resolvent_catalog(model: &CoverModel, tag: CatalogTag) -> Result<ResolventModel> {
    ResolventRequest::new(model, SubgroupSpec::Tag(tag)).build()
}

#[derive(Clone, Debug)]
pub struct ResolventModel {
    /// Monic in y with coefficients in F_p[t].
    pub poly: BiPoly,
    pub subgroup: PermSubgroup,
    pub label: String,
    pub construction: Construction,
}

impl ResolventModel {
    pub fn index(&self) -> usize {
        self.subgroup.index() as usize
    }

    /// The resolvent as a cover; irreducibility is certified by the reduced
    /// basis computed in `measure`.
    pub fn cover(&self, seed: u64) -> Result<CoverModel> {
        Ok(CoverModel::validate(self.poly.clone(), true, seed)?)
    }

    pub fn measure(&self, seed: u64) -> Result<ResolventMeasurement> {
        let cover = self.cover(seed)?;
        let analysis = Analysis::new(&cover)?;
        let basis = analysis.reduced_basis()?;
        Ok(ResolventMeasurement {
            label: self.label.clone(),
            index: self.index(),
            genus: analysis.genus(),
            profile: basis.profile(),
            branch_locus: branch_locus(&analysis),
        })
    }
}

/// Finite branch points as the squarefree part of the maximal-order
/// discriminant, with a flag for infinity.
fn branch_locus(a: &Analysis) -> (crate::exactalg::Poly, bool) {
    let disc = &a.finite().disc;
    let sq = crate::exactalg::factor::squarefree_part(disc).monic();
    (sq, a.infinite().disc.valuation().unwrap_or(0) > 0)
}

#[derive(Clone, Debug)]
pub struct ResolventMeasurement {
    pub label: String,
    pub index: usize,
    pub genus: i64,
    pub profile: ScrollarProfile,
    pub branch_locus: (crate::exactalg::Poly, bool),
}
