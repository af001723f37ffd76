//! Ternary trees in prefix (Polish) encoding. A token below 0x80 is a leaf
//! (a 0-based variable in monomials, [`LEAF`] in association types); a token
//! `0x80 | k` is an internal node labeled by operation k.

use std::fmt;

use super::{OperationSymbol, TermsError};
use crate::symmetric::Permutation;

pub const LEAF: u8 = 0x7F;
const OP_FLAG: u8 = 0x80;

#[inline]
pub(crate) fn op_token(k: usize) -> u8 {
    debug_assert!(k < 0x7F);
    OP_FLAG | k as u8
}

#[inline]
pub(crate) fn is_op(t: u8) -> bool {
    t & OP_FLAG != 0
}

#[inline]
pub(crate) fn op_index(t: u8) -> usize {
    (t & !OP_FLAG) as usize
}

/// End (exclusive) of the subtree starting at `start`.
pub(crate) fn subtree_end(tokens: &[u8], start: usize) -> usize {
    let mut need = 1usize;
    let mut i = start;
    while need > 0 {
        if is_op(tokens[i]) {
            need += 2;
        } else {
            need -= 1;
        }
        i += 1;
    }
    i
}

/// Start positions of the three children of the node at `start`.
pub(crate) fn children(tokens: &[u8], start: usize) -> [usize; 3] {
    let a = start + 1;
    let b = subtree_end(tokens, a);
    let c = subtree_end(tokens, b);
    [a, b, c]
}

/// Shape of a complete ternary tree with operation-labeled internal nodes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssociationType(pub(crate) Vec<u8>);

impl AssociationType {
    pub fn leaf() -> Self {
        AssociationType(vec![LEAF])
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&t| is_op(t)).count()
    }

    pub fn degree(&self) -> usize {
        2 * self.weight() + 1
    }

    pub fn tokens(&self) -> &[u8] {
        &self.0
    }

    /// Operation labels of the internal nodes in preorder.
    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().filter(|&&t| is_op(t)).map(|&t| op_index(t)).collect()
    }

    /// Same shape with every node relabeled by `label`.
    pub fn relabel_all(&self, label: usize) -> AssociationType {
        AssociationType(
            self.0
                .iter()
                .map(|&t| if is_op(t) { op_token(label) } else { t })
                .collect(),
        )
    }

    pub fn display(&self, ops: &[OperationSymbol]) -> String {
        let mut s = String::new();
        write_tree(&self.0, 0, ops, &mut s, &mut |_, s| s.push('-'));
        s
    }
}

impl fmt::Debug for AssociationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AssociationType({:?})", self.0)
    }
}

fn skeletons(w: usize) -> Vec<Vec<u8>> {
    if w == 0 {
        return vec![vec![LEAF]];
    }
    let mut out = Vec::new();
    let rest = w - 1;
    for w1 in (0..=rest).rev() {
        for w2 in (0..=rest - w1).rev() {
            let w3 = rest - w1 - w2;
            let (s1, s2, s3) = (skeletons(w1), skeletons(w2), skeletons(w3));
            for t1 in &s1 {
                for t2 in &s2 {
                    for t3 in &s3 {
                        let mut t = vec![op_token(0)];
                        t.extend(t1);
                        t.extend(t2);
                        t.extend(t3);
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// Association types of weight w over `n_ops` operations. Skeletons come in
/// a fixed recursive order (children weights in decreasing lexicographic
/// order, then children shapes); each skeleton is expanded over all node
/// labelings, the preorder-first node varying fastest.
pub fn association_types(w: usize, n_ops: usize) -> Vec<AssociationType> {
    let mut out = Vec::new();
    for sk in skeletons(w) {
        let nodes: Vec<usize> = (0..sk.len()).filter(|&i| is_op(sk[i])).collect();
        let count = n_ops.pow(nodes.len() as u32);
        for mut code in 0..count {
            let mut t = sk.clone();
            for &i in &nodes {
                t[i] = op_token(code % n_ops);
                code /= n_ops;
            }
            out.push(AssociationType(t));
        }
    }
    out
}

/// A multilinear tree monomial: an association type with its leaves filled
/// by distinct variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeMonomial(pub(crate) Vec<u8>);

impl TreeMonomial {
    /// Fills the leaves of `ty`, left to right, with the variables
    /// p(1), ..., p(n).
    pub fn new(ty: &AssociationType, leaves: &Permutation) -> Self {
        assert_eq!(ty.degree(), leaves.degree(), "degree mismatch");
        let mut k = 0;
        TreeMonomial(
            ty.0.iter()
                .map(|&t| {
                    if is_op(t) {
                        t
                    } else {
                        k += 1;
                        leaves.images()[k - 1]
                    }
                })
                .collect(),
        )
    }

    /// The single operation ω(x1, x2, x3).
    pub fn operation(op: usize) -> Self {
        TreeMonomial(vec![op_token(op), 0, 1, 2])
    }

    /// The one-variable monomial x1.
    pub fn variable() -> Self {
        TreeMonomial(vec![0])
    }

    pub(crate) fn from_tokens(tokens: Vec<u8>) -> Self {
        TreeMonomial(tokens)
    }

    pub fn tokens(&self) -> &[u8] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&t| is_op(t)).count()
    }

    pub fn degree(&self) -> usize {
        2 * self.weight() + 1
    }

    pub fn association_type(&self) -> AssociationType {
        AssociationType(
            self.0
                .iter()
                .map(|&t| if is_op(t) { t } else { LEAF })
                .collect(),
        )
    }

    /// Variables in left-to-right leaf order, as a permutation.
    pub fn leaves(&self) -> Permutation {
        Permutation::from_images(self.0.iter().copied().filter(|&t| !is_op(t)).collect())
    }

    /// Substitutes variable i by p(i).
    pub fn substitute(&self, p: &Permutation) -> TreeMonomial {
        TreeMonomial(
            self.0
                .iter()
                .map(|&t| if is_op(t) { t } else { p.apply(t as usize) as u8 })
                .collect(),
        )
    }

    pub fn display(&self, ops: &[OperationSymbol]) -> String {
        let n = self.degree();
        let mut s = String::new();
        write_tree(&self.0, 0, ops, &mut s, &mut |v, s| s.push_str(&variable_name(v, n)));
        s
    }
}

impl fmt::Debug for TreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreeMonomial({:?})", self.0)
    }
}

/// Name of 0-based variable v among n: the last n letters of the alphabet
/// (x,y,z for n = 3; v..z for n = 5; t..z for n = 7), or x1, x2, ... beyond.
pub fn variable_name(v: usize, n: usize) -> String {
    if n <= 26 {
        let first = b'z' + 1 - n as u8;
        ((first + v as u8) as char).to_string()
    } else {
        format!("x{}", v + 1)
    }
}

fn write_tree(
    tokens: &[u8],
    start: usize,
    ops: &[OperationSymbol],
    out: &mut String,
    leaf: &mut dyn FnMut(usize, &mut String),
) {
    let t = tokens[start];
    if !is_op(t) {
        leaf(t as usize, out);
        return;
    }
    let k = op_index(t);
    let (open, close) = ops.get(k).map_or(('(', ')'), |o| o.brackets());
    out.push(open);
    for (i, c) in children(tokens, start).into_iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_tree(tokens, c, ops, out, leaf);
    }
    out.push(close);
}

/// Checks that a monomial's tokens describe a well-formed multilinear tree.
pub(crate) fn validate(tokens: &[u8]) -> Result<(), TermsError> {
    if tokens.is_empty() || subtree_end(tokens, 0) != tokens.len() {
        return Err(TermsError::Malformed);
    }
    let mut vars: Vec<u8> = tokens.iter().copied().filter(|&t| !is_op(t)).collect();
    vars.sort_unstable();
    if vars.iter().enumerate().any(|(i, &v)| v as usize != i) {
        return Err(TermsError::NotMultilinear);
    }
    Ok(())
}
