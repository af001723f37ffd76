//! Symmetric groups: permutations, partitions, standard tableaux and
//! irreducible representations.

mod algebra;
mod irrep;
mod partition;
mod perm;

use thiserror::Error;

pub use algebra::GroupAlgebraElement;
pub use irrep::{
    algebra_image, character, clifton_matrix, irrep, operation_signature, standard_tableaux, Irrep,
    IrrepMatrix, IrrepTable, StandardTableau,
};
pub use partition::{dim_irrep, partitions, Partition};
pub use perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetricError {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("malformed partition {0:?}")]
    BadPartition(String),
}
