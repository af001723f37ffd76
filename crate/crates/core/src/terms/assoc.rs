use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::tree::{children, is_op, op_index, variable_name};
use super::{MonomialIndex, MultilinearPoly, OperationSymbol, TermsError, TreeMonomial};
use crate::linalg::ExactMatrix;
use crate::symmetric::Permutation;

/// A multilinear word of the associative triple product: the variables in
/// the order they are multiplied.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AssocWord(pub(crate) Vec<u8>);

impl AssocWord {
    pub fn from_permutation(p: &Permutation) -> Self {
        AssocWord(p.images().to_vec())
    }

    pub fn as_permutation(&self) -> Permutation {
        Permutation::from_images(self.0.clone())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Position action: the word whose i-th letter is the p(i)-th letter of self.
    pub fn permute_positions(&self, p: &Permutation) -> AssocWord {
        AssocWord((0..self.0.len()).map(|i| self.0[p.apply(i)]).collect())
    }

    pub fn display(&self) -> String {
        let n = self.0.len();
        self.0.iter().map(|&v| variable_name(v as usize, n)).collect()
    }
}

/// Rational combination of associative words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AssocPoly {
    terms: BTreeMap<AssocWord, BigRational>,
}

impl AssocPoly {
    pub fn zero() -> Self {
        AssocPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AssocWord, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &AssocWord) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, w: AssocWord, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AssocPoly, c: &BigRational) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigRational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if !a.is_one() {
                s.push_str(&a.to_string());
            }
            s.push_str(&w.display());
        }
        s
    }
}

fn expand_tokens(
    tokens: &[u8],
    start: usize,
    ops: &[OperationSymbol],
) -> Result<Vec<(Vec<u8>, BigRational)>, TermsError> {
    let t = tokens[start];
    if !is_op(t) {
        return Ok(vec![(vec![t], BigRational::one())]);
    }
    let op = ops
        .get(op_index(t))
        .ok_or(TermsError::UnknownOperation(op_index(t)))?;
    let kids = children(tokens, start);
    let parts: Vec<Vec<(Vec<u8>, BigRational)>> = kids
        .iter()
        .map(|&c| expand_tokens(tokens, c, ops))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for (q, c) in op.expansion().terms() {
        let a = &parts[q.apply(0)];
        let b = &parts[q.apply(1)];
        let d = &parts[q.apply(2)];
        for (wa, ca) in a {
            for (wb, cb) in b {
                for (wd, cd) in d {
                    let mut w = Vec::with_capacity(wa.len() + wb.len() + wd.len());
                    w.extend(wa);
                    w.extend(wb);
                    w.extend(wd);
                    out.push((w, c * ca * cb * cd));
                }
            }
        }
    }
    Ok(out)
}

/// Expansion of a tree monomial into associative words.
pub fn expand(m: &TreeMonomial, ops: &[OperationSymbol]) -> Result<AssocPoly, TermsError> {
    let mut p = AssocPoly::zero();
    for (w, c) in expand_tokens(m.tokens(), 0, ops)? {
        p.add_term(AssocWord(w), c);
    }
    Ok(p)
}

pub fn expand_poly(f: &MultilinearPoly, ops: &[OperationSymbol]) -> Result<AssocPoly, TermsError> {
    let mut p = AssocPoly::zero();
    for (m, c) in f.terms() {
        p.add_scaled(&expand(m, ops)?, c);
    }
    Ok(p)
}

/// Dense matrices above this many entries are refused.
pub const DENSE_ENTRY_LIMIT: usize = 20_000_000;

/// Sparse columns of the expansion matrix: for each tree monomial (in
/// [`MonomialIndex`] order) the list of (word rank, coefficient), where word
/// rank is the lexicographic rank of the word as a permutation.
pub fn expansion_columns(
    index: &MonomialIndex,
    ops: &[OperationSymbol],
) -> Result<Vec<Vec<(usize, BigRational)>>, TermsError> {
    (0..index.len())
        .map(|col| {
            let p = expand(&index.monomial(col), ops)?;
            Ok(p.terms()
                .map(|(w, c)| (w.as_permutation().lex_rank(), c.clone()))
                .collect())
        })
        .collect()
}

/// The expansion matrix of weight w: rows are the (2w+1)! words in
/// lexicographic order, columns the tree monomials in [`MonomialIndex`] order.
pub fn expansion_matrix(w: usize, ops: &[OperationSymbol]) -> Result<ExactMatrix, TermsError> {
    let index = MonomialIndex::new(w, ops.len());
    let rows: usize = (1..=2 * w + 1).product();
    let cols = index.len();
    if rows.saturating_mul(cols) > DENSE_ENTRY_LIMIT {
        return Err(TermsError::TooLarge { rows, cols });
    }
    let mut m = ExactMatrix::zeros(rows, cols);
    for (j, col) in expansion_columns(&index, ops)?.into_iter().enumerate() {
        for (i, c) in col {
            m.set(i, j, c);
        }
    }
    Ok(m)
}
