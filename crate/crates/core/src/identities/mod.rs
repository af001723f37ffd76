//! Searches for polynomial identities satisfied by operations defined in an
//! associative triple system: integer kernels with LLL at low degree, module
//! generators, and the per-partition representation method at degree 7.

mod catalog;
mod generators;
mod isotypic;
mod kernel;

use thiserror::Error;

use crate::linalg::LinalgError;
use crate::terms::TermsError;

pub use catalog::{
    comtrans_relations, mixed_degree5_generators, mixed_weight2, single_operation_pair,
    single_operation_weight2, KnownIdentity,
};
pub use generators::{
    consequence_rank, find_new_generators, module_rank, wac_new_module_dimension,
    GeneratorSearch, ModuleSpan,
};
pub use isotypic::{
    degree7_mixed_check, degree7_table, IsotypicSetup, MixedRow, MixedSetup, MultiplicityRow,
    MultiplicityTable, RankMode,
};
pub use kernel::{kernel_pipeline, minimal_module_generators, verify_identity, KernelReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error(transparent)]
    Terms(#[from] TermsError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("ranks modulo the two primes disagree ({a} vs {b})")]
    PrimeDisagreement { a: usize, b: usize },
    #[error("coefficient is not a machine integer")]
    NonIntegerCoefficient,
    #[error("not an identity: {0}")]
    NotAnIdentity(String),
    #[error("consequence outside the kernel for partition {0}")]
    ContainmentFailed(String),
    #[error("{0}")]
    Unsupported(String),
}
