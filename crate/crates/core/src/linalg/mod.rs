//! Exact linear algebra over Z, Q and prime fields.

mod echelon;
mod hnf;
mod lll;
mod matrix;
pub mod modular;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub use echelon::{nullspace, rank, rcf, row_space_contained, IntEchelon};
pub use hnf::{hnf_with_transform, integer_kernel_basis};
pub use lll::{is_lll_reduced, lll_reduce};
pub use matrix::{parse_rational, ExactMatrix};
pub use modular::{dual_prime_rank, rank_mod_p, ModEchelon, Modulus, PRIME_A, PRIME_B};

pub(crate) use hnf::hnf_rows;
pub(crate) use matrix::{primitive_from_rational, sign_normalize};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix has non-integer entries")]
    NotInteger,
    #[error("prime {0} divides a denominator")]
    PrimeDividesDenominator(u64),
    #[error("{0} is not a usable prime modulus (need a prime below 2^31)")]
    BadModulus(u64),
    #[error("ranks modulo the two primes disagree ({a} vs {b})")]
    PrimeDisagreement { a: usize, b: usize },
    #[error("lattice vectors are linearly dependent")]
    DependentVectors,
    #[error("parse error: {0}")]
    Parse(String),
}

/// A list of linearly independent integer vectors of a common length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    dim: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    /// Checks lengths and linear independence.
    pub fn new(dim: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self, LinalgError> {
        let b = Self::new_unchecked(dim, vectors)?;
        let mut e = IntEchelon::new(dim);
        for v in &b.vectors {
            if !e.insert(v.clone()) {
                return Err(LinalgError::DependentVectors);
            }
        }
        Ok(b)
    }

    /// Checks lengths only; used where independence holds by construction.
    pub(crate) fn new_unchecked(dim: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(LinalgError::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        Ok(LatticeBasis { dim, vectors })
    }

    /// Basis (the nonzero HNF rows) of the lattice generated by arbitrary,
    /// possibly dependent, integer vectors.
    pub fn from_generators(dim: usize, generators: &[Vec<BigInt>]) -> Result<Self, LinalgError> {
        let b = Self::new_unchecked(dim, generators.to_vec())?;
        let h = b.hermite_form();
        Ok(LatticeBasis { dim, vectors: h })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<BigInt>> {
        self.vectors
    }

    pub fn squared_lengths(&self) -> Vec<BigInt> {
        self.vectors
            .iter()
            .map(|v| v.iter().map(|x| x * x).sum())
            .collect()
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_int_rows(self.dim, &self.vectors).expect("uniform lengths")
    }

    /// Nonzero rows of the row-style HNF; a canonical form of the lattice.
    pub fn hermite_form(&self) -> Vec<Vec<BigInt>> {
        let (h, _) = hnf_rows(&self.vectors, self.dim);
        h.into_iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect()
    }

    pub fn same_lattice(&self, other: &LatticeBasis) -> bool {
        self.dim == other.dim && self.hermite_form() == other.hermite_form()
    }

    /// Sign-normalizes every vector (first nonzero entry positive) and sorts
    /// by squared length, then lexicographically by entries.
    pub fn sorted_normalized(&self) -> LatticeBasis {
        let mut vs: Vec<(BigInt, Vec<BigInt>)> = self
            .vectors
            .iter()
            .map(|v| {
                let mut v = v.clone();
                sign_normalize(&mut v);
                (v.iter().map(|x| x * x).sum(), v)
            })
            .collect();
        vs.sort();
        LatticeBasis {
            dim: self.dim,
            vectors: vs.into_iter().map(|(_, v)| v).collect(),
        }
    }
}

/// The classic Lovász constant 3/4.
pub fn default_delta() -> BigRational {
    BigRational::new(3.into(), 4.into())
}
