//! Exact arithmetic tower: prime and extension fields, polynomials,
//! rational functions, polynomial matrices, factorization, resultants and
//! interpolated characteristic polynomials.

pub mod bipoly;
pub mod ext;
pub mod factor;
pub mod field;
pub mod interp;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod text;

use thiserror::Error;

pub use bipoly::{discriminant_x, resultant_x, BiPoly};
pub use factor::{factorize, is_irreducible, squarefree_decomposition};
pub use field::{ExtField, Field, PrimeField, DEFAULT_P};
pub use interp::{charpoly_interpolated, RatMatrix, SpecializableOperator};
pub use matrix::{popov, weak_popov, PolyMatrix, RowReduced};
pub use poly::Poly;
pub use ratfunc::{RatField, RatFunc};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("modulus {0} is not an odd prime below 2^61")]
    BadModulus(u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("need {needed} sample points but F_{p} has too few admissible values")]
    InsufficientPoints { needed: usize, p: u64 },
    #[error("evaluation rejected sample point {0}")]
    SampleRejected(u64),
    #[error("evaluations returned vectors of different lengths")]
    ShapeMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}
