//! Universal associative envelopes of the 2×2 matrix triple systems:
//! noncommutative Gröbner–Shirshov bases over the alphabet a, b, c, d
//! (the matrix units e11, e12, e21, e22) and analysis of the resulting
//! finite-dimensional algebras.

mod algebra;
mod groebner;
mod poly;
mod tables;

use std::path::Path;

pub use algebra::{rational_roots, FiniteAlgebra, WedderburnReport};
pub use groebner::{
    compositions, distinct_composition_forms, envelope_basis, envelope_generators, groebner_completion,
    normal_form, normal_words, standard_forms, triple_relations, Composition, CompletionRound, EnvelopeKind,
    GroebnerBasis, OverlapKind, DEFAULT_DEGREE_CAP,
};
pub use poly::{NCPoly, NCWord, LETTERS};
pub use tables::{
    check_commutator_table, discrepancy_report, verify_translator_formulas, ProductCheck,
    PRINTED_COMMUTATOR_TABLE, PRINTED_TRANSLATOR_PRODUCTS,
};

#[derive(Debug, thiserror::Error)]
pub enum EnvelopeError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("completion produced degree {degree}, above the cap {cap}")]
    DegreeCap { cap: usize, degree: usize },
    #[error("normal words continue past degree {0}")]
    Infinite(usize),
    #[error("word {0} is not a basis word")]
    NotReduced(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// One polynomial per line in "±coeff*word" form.
pub fn format_polynomials(polys: &[NCPoly]) -> String {
    polys.iter().map(|p| p.to_line() + "\n").collect()
}

/// Parses one polynomial per line; blank lines and lines starting with '#' are skipped.
pub fn parse_polynomials(text: &str) -> Result<Vec<NCPoly>, EnvelopeError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

pub fn save_polynomials(path: &Path, polys: &[NCPoly]) -> Result<(), EnvelopeError> {
    std::fs::write(path, format_polynomials(polys))?;
    Ok(())
}

pub fn load_polynomials(path: &Path) -> Result<Vec<NCPoly>, EnvelopeError> {
    parse_polynomials(&std::fs::read_to_string(path)?)
}
