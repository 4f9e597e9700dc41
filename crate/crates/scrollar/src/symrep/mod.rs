//! Symmetric-group combinatorics: partitions, tableaux, characters and
//! enumerated permutation subgroups.

mod catalog;
mod character;
mod partition;
mod perm;
mod tableau;

pub use catalog::{
    alternating, alternating_on, cayley_quintic, dihedral_quartic, exotic_sextic, gassmann_pair, point_stabilizer,
    symmetric_on, young_subgroup, CatalogTag, SubgroupSpec,
};
pub use character::{character, CharacterTable};
pub use partition::{binomial, factorial, partitions_of, Partition};
pub use perm::{gassmann_equivalent, Perm, PermSubgroup};
pub use tableau::{standard_tableaux, StandardTableau};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("degree {0} out of range")]
    DegreeOutOfRange(u32),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("subgroup closure exceeds {0} elements")]
    TooLarge(usize),
    #[error("non-integral value: {0}")]
    NonIntegral(String),
    #[error("unknown subgroup: {0}")]
    UnknownSubgroup(String),
}

pub type Result<T> = std::result::Result<T, SymError>;
