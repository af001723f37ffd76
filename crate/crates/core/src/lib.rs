//! Exact computer algebra for multilinear identities of ternary operations.

pub mod envelope;
pub mod identities;
pub mod linalg;
pub mod rewrite;
pub mod symmetric;
pub mod terms;
