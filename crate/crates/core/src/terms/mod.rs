//! The free multilinear ternary term algebra: association types, tree
//! monomials, their expansion into associative words, and partial
//! composition.

mod assoc;
mod op;
mod parse;
mod poly;
mod tree;

use thiserror::Error;

pub use assoc::{
    expand, expand_poly, expansion_columns, expansion_matrix, AssocPoly, AssocWord,
    DENSE_ENTRY_LIMIT,
};
pub use op::{comtrans_ops, OperationSymbol};
pub use parse::parse_poly;
pub use poly::{apply_permutation, consequence_set, partial_composition, MonomialIndex, MultilinearPoly};
pub use tree::{association_types, variable_name, AssociationType, TreeMonomial, LEAF};

pub(crate) use tree::{children, is_op, op_index, op_token, subtree_end};


#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermsError {
    #[error("slot {slot} out of range for degree {degree}")]
    SlotOutOfRange { slot: usize, degree: usize },
    #[error("expected weight {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },
    #[error("operation index {0} is not in the operation list")]
    UnknownOperation(usize),
    #[error("malformed tree")]
    Malformed,
    #[error("monomial is not multilinear")]
    NotMultilinear,
    #[error("expansion matrix {rows}x{cols} is too large for dense storage")]
    TooLarge { rows: usize, cols: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
