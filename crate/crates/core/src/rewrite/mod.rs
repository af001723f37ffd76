//! Normal forms in the comtrans operad: the Gröbner basis of the degree-3
//! relations as rewrite rules on ternary nodes, reduction of multilinear
//! monomials, and normal-form counts.
//!
//! A node is classified by the relative order of its three children. Children
//! compare by weight, then by their sorted variable sets; the smallest child
//! plays the role of x, the largest of z. Rewriting a child never changes its
//! weight or variables, so node patterns are stable under rewriting.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{rcf, row_space_contained, ExactMatrix};
use crate::symmetric::Permutation;
use crate::terms::{
    children, comtrans_ops, is_op, op_index, op_token, MonomialIndex, MultilinearPoly,
    TermsError, TreeMonomial,
};
use crate::identities::{comtrans_relations, IdentityError};

/// Operation indices in the comtrans operation list.
pub const COMMUTATOR: usize = 0;
pub const TRANSLATOR: usize = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error(transparent)]
    Terms(#[from] TermsError),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error("enumeration is limited to weight 3, got {0}")]
    TooLarge(usize),
}

/// An operation applied to the three children in a given order:
/// `arrangement[i]` is the rank (0 = smallest) of the child in slot i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodePattern {
    pub op: usize,
    pub arrangement: Permutation,
}

impl NodePattern {
    pub fn new(op: usize, arrangement: &[usize]) -> Self {
        NodePattern {
            op,
            arrangement: Permutation::from_one_line(arrangement).expect("permutation of 1..3"),
        }
    }

    /// Position in the ordered twelve-operation basis: translators first,
    /// arrangements in lexicographic order.
    pub fn basis_position(&self) -> usize {
        let r = self.arrangement.lex_rank();
        if self.op == TRANSLATOR {
            r
        } else {
            6 + r
        }
    }

    pub fn from_basis_position(i: usize) -> Self {
        let op = if i < 6 { TRANSLATOR } else { COMMUTATOR };
        NodePattern {
            op,
            arrangement: Permutation::from_lex_rank(3, i % 6),
        }
    }

    fn monomial(&self) -> TreeMonomial {
        let mut t = vec![op_token(self.op)];
        t.extend(self.arrangement.images());
        TreeMonomial::from_tokens(t)
    }
}

impl fmt::Display for NodePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.monomial().display(&comtrans_ops()))
    }
}

/// The ordered basis of the twelve degree-3 operations.
pub fn basis12() -> Vec<NodePattern> {
    (0..12).map(NodePattern::from_basis_position).collect()
}

/// Column orders for the relation matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnOrder {
    /// Translators first (the basis order used for the rewrite rules).
    TranslatorFirst,
    /// Commutators first.
    CommutatorFirst,
}

impl ColumnOrder {
    fn column(self, p: &NodePattern) -> usize {
        match self {
            ColumnOrder::TranslatorFirst => p.basis_position(),
            ColumnOrder::CommutatorFirst => (p.basis_position() + 6) % 12,
        }
    }
}

/// The 18 × 12 matrix whose rows are the coefficient vectors of the three
/// defining relations under the six substitutions of x, y, z (in
/// lexicographic order).
pub fn relation_matrix(order: ColumnOrder) -> Result<ExactMatrix, RewriteError> {
    let ops = comtrans_ops();
    let mut rows = Vec::new();
    for f in comtrans_relations(&ops)? {
        for s in Permutation::all(3) {
            let mut row = vec![BigRational::zero(); 12];
            for (m, c) in f.apply_permutation(&s).terms() {
                let p = NodePattern {
                    op: op_index(m.tokens()[0]),
                    arrangement: m.leaves(),
                };
                row[order.column(&p)] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(ExactMatrix::from_rows(12, rows).expect("uniform rows"))
}

/// lhs → Σ c·rhs; the lhs is greater than every rhs pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: NodePattern,
    pub rhs: Vec<(NodePattern, BigRational)>,
}

impl RewriteRule {
    /// lhs − Σ c·rhs as a degree-3 polynomial.
    pub fn relation(&self) -> MultilinearPoly {
        let mut f = MultilinearPoly::from_monomial(self.lhs.monomial());
        for (p, c) in &self.rhs {
            f.add_term(p.monomial(), -c.clone());
        }
        f
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> ", self.lhs)?;
        let mut first = true;
        for (p, c) in &self.rhs {
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if !c.abs().is_one() {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Rewrite rules read off the nonzero rows of the RCF of the relation
/// matrix: the pivot column is the lhs, the remaining entries (negated) the
/// rhs.
pub fn comtrans_groebner() -> Result<Vec<RewriteRule>, RewriteError> {
    let (r, rank) = rcf(&relation_matrix(ColumnOrder::TranslatorFirst)?);
    let basis = basis12();
    Ok((0..rank)
        .map(|i| {
            let row = r.row(i);
            let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let rhs = (pivot + 1..12)
                .filter(|&j| !row[j].is_zero())
                .map(|j| (basis[j].clone(), -row[j].clone()))
                .collect();
            RewriteRule {
                lhs: basis[pivot].clone(),
                rhs,
            }
        })
        .collect())
}

/// Whether lhs − rhs lies in the span of the permuted relations.
pub fn rule_is_sound(rule: &RewriteRule) -> Result<bool, RewriteError> {
    let rel = relation_matrix(ColumnOrder::TranslatorFirst)?;
    let mut row = vec![BigRational::zero(); 12];
    row[rule.lhs.basis_position()] = BigRational::one();
    for (p, c) in &rule.rhs {
        row[p.basis_position()] -= c;
    }
    let single = ExactMatrix::from_rows(12, vec![row]).expect("one row");
    Ok(row_space_contained(&rel, &single))
}

/// Reduction order for [`RewriteSystem::normal_form`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Rewrite the leftmost node none of whose descendants is reducible.
    Innermost,
    /// Rewrite the first reducible node in preorder.
    Outermost,
}

/// How [`count_normal_forms`] counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    /// Reduce every multilinear monomial and count distinct normal-form
    /// monomials.
    Enumerate,
    /// Count irreducible monomials as unordered trees with one of the
    /// irreducible patterns at each node.
    Structural,
}

/// The rules indexed by lhs pattern.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    rules: HashMap<NodePattern, Vec<(NodePattern, BigRational)>>,
    irreducible: Vec<NodePattern>,
}

fn child_key(tokens: &[u8], start: usize) -> (usize, Vec<u8>) {
    let end = crate::terms::subtree_end(tokens, start);
    let mut vars: Vec<u8> = tokens[start..end].iter().copied().filter(|&t| !is_op(t)).collect();
    vars.sort_unstable();
    let weight = (vars.len() - 1) / 2;
    (weight, vars)
}

/// Pattern of the node at `start`: its operation and the ranks of its
/// children in slot order.
fn node_pattern(tokens: &[u8], start: usize) -> NodePattern {
    let kids = children(tokens, start);
    let keys: Vec<_> = kids.iter().map(|&c| child_key(tokens, c)).collect();
    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut rank = [0u8; 3];
    for (r, &slot) in order.iter().enumerate() {
        rank[slot] = r as u8;
    }
    NodePattern {
        op: op_index(tokens[start]),
        arrangement: Permutation::from_one_line(&rank.map(|r| r as usize + 1)).expect("ranks"),
    }
}

impl RewriteSystem {
    pub fn new(rules: &[RewriteRule]) -> Self {
        let map: HashMap<_, _> = rules
            .iter()
            .map(|r| (r.lhs.clone(), r.rhs.clone()))
            .collect();
        let irreducible = basis12().into_iter().filter(|p| !map.contains_key(p)).collect();
        RewriteSystem {
            rules: map,
            irreducible,
        }
    }

    pub fn comtrans() -> Result<Self, RewriteError> {
        Ok(Self::new(&comtrans_groebner()?))
    }

    /// Basis operations that are not the lhs of any rule.
    pub fn irreducible_patterns(&self) -> &[NodePattern] {
        &self.irreducible
    }

    fn reducible_nodes(&self, tokens: &[u8]) -> Vec<usize> {
        (0..tokens.len())
            .filter(|&i| is_op(tokens[i]) && self.rules.contains_key(&node_pattern(tokens, i)))
            .collect()
    }

    pub fn is_irreducible(&self, m: &TreeMonomial) -> bool {
        self.reducible_nodes(m.tokens()).is_empty()
    }

    /// One rewrite step at the node starting at `start`.
    fn rewrite_at(&self, tokens: &[u8], start: usize) -> Vec<(Vec<u8>, BigRational)> {
        let pat = node_pattern(tokens, start);
        let rhs = &self.rules[&pat];
        let kids = children(tokens, start);
        let end = crate::terms::subtree_end(tokens, start);
        // Child subtrees by rank (0 = smallest).
        let mut by_rank: [&[u8]; 3] = [&[]; 3];
        for (slot, &c) in kids.iter().enumerate() {
            let e = crate::terms::subtree_end(tokens, c);
            by_rank[pat.arrangement.apply(slot)] = &tokens[c..e];
        }
        rhs.iter()
            .map(|(p, c)| {
                let mut t = tokens[..start].to_vec();
                t.push(op_token(p.op));
                for slot in 0..3 {
                    t.extend_from_slice(by_rank[p.arrangement.apply(slot)]);
                }
                t.extend_from_slice(&tokens[end..]);
                (t, c.clone())
            })
            .collect()
    }

    fn pick(&self, tokens: &[u8], strategy: Strategy) -> Option<usize> {
        let nodes = self.reducible_nodes(tokens);
        match strategy {
            Strategy::Outermost => nodes.first().copied(),
            Strategy::Innermost => nodes
                .iter()
                .copied()
                .find(|&s| {
                    let end = crate::terms::subtree_end(tokens, s);
                    !nodes.iter().any(|&o| o > s && o < end)
                }),
        }
    }

    /// Rewrites until every monomial is irreducible.
    pub fn normal_form(&self, m: &TreeMonomial, strategy: Strategy) -> MultilinearPoly {
        self.normal_form_poly(&MultilinearPoly::from_monomial(m.clone()), strategy)
    }

    pub fn normal_form_poly(&self, f: &MultilinearPoly, strategy: Strategy) -> MultilinearPoly {
        let mut done = MultilinearPoly::zero(f.degree());
        let mut todo: BTreeMap<Vec<u8>, BigRational> = f
            .terms()
            .map(|(m, c)| (m.tokens().to_vec(), c.clone()))
            .collect();
        while let Some((t, c)) = todo.pop_first() {
            if c.is_zero() {
                continue;
            }
            match self.pick(&t, strategy) {
                None => done.add_term(TreeMonomial::from_tokens(t), c),
                Some(s) => {
                    for (u, d) in self.rewrite_at(&t, s) {
                        let e = todo.entry(u).or_insert_with(BigRational::zero);
                        *e += &c * d;
                    }
                }
            }
        }
        done
    }

    /// Bottom-up normal form with integer coefficients: children first, then
    /// the node; equal to the innermost strategy.
    fn fast_normal_form(&self, tokens: &[u8], start: usize) -> Vec<(Vec<u8>, i64)> {
        if !is_op(tokens[start]) {
            return vec![(vec![tokens[start]], 1)];
        }
        let pat = node_pattern(tokens, start);
        let kids = children(tokens, start);
        let mut by_rank: [Vec<(Vec<u8>, i64)>; 3] = Default::default();
        for (slot, &c) in kids.iter().enumerate() {
            by_rank[pat.arrangement.apply(slot)] = self.fast_normal_form(tokens, c);
        }
        let identity = [(pat.clone(), BigRational::one())];
        let rhs: &[(NodePattern, BigRational)] = match self.rules.get(&pat) {
            Some(r) => r,
            None => &identity,
        };
        let mut out = Vec::new();
        for (p, c) in rhs {
            let c = i64::try_from(c.to_integer()).expect("small rule coefficient");
            let parts: Vec<&Vec<(Vec<u8>, i64)>> =
                (0..3).map(|slot| &by_rank[p.arrangement.apply(slot)]).collect();
            for (a, ca) in parts[0] {
                for (b, cb) in parts[1] {
                    for (d, cd) in parts[2] {
                        let mut t = Vec::with_capacity(1 + a.len() + b.len() + d.len());
                        t.push(op_token(p.op));
                        t.extend(a);
                        t.extend(b);
                        t.extend(d);
                        out.push((t, c * ca * cb * cd));
                    }
                }
            }
        }
        out
    }
}

/// Number of distinct normal-form monomials of weight w.
pub fn count_normal_forms(w: usize, method: CountMethod) -> Result<BigUint, RewriteError> {
    match method {
        CountMethod::Enumerate => {
            if w > 3 {
                return Err(RewriteError::TooLarge(w));
            }
            let sys = RewriteSystem::comtrans()?;
            let index = MonomialIndex::new(w, 2);
            let mut seen: HashSet<Vec<u8>> = HashSet::new();
            for col in 0..index.len() {
                let m = index.monomial(col);
                let mut acc: HashMap<Vec<u8>, i64> = HashMap::new();
                for (t, c) in sys.fast_normal_form(m.tokens(), 0) {
                    *acc.entry(t).or_insert(0) += c;
                }
                seen.extend(acc.into_iter().filter(|(_, c)| *c != 0).map(|(t, _)| t));
            }
            Ok(BigUint::from(seen.len()))
        }
        CountMethod::Structural => {
            let sys = RewriteSystem::comtrans()?;
            Ok(structural_count(2 * w + 1, sys.irreducible_patterns().len()))
        }
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Irreducible monomials on n labeled leaves: unordered ternary trees with
/// one of `per_node` patterns at every node. The block containing the
/// smallest leaf is chosen first, then the block containing the smallest
/// remaining leaf.
fn structural_count(n: usize, per_node: usize) -> BigUint {
    let mut f = vec![BigUint::zero(); n + 1];
    f[1] = BigUint::one();
    for m in (3..=n).step_by(2) {
        let mut total = BigUint::zero();
        for a in (1..m).step_by(2) {
            for b in (1..m - a).step_by(2) {
                let c = m - a - b;
                if c % 2 == 0 {
                    continue;
                }
                total += binomial(m - 1, a - 1) * binomial(m - a - 1, b - 1) * &f[a] * &f[b] * &f[c];
            }
        }
        f[m] = total * per_node;
    }
    f[n].clone()
}

/// (3w)! / (w! · 6^w) · 5^w.
pub fn conjecture_value(w: usize) -> BigUint {
    let fact = |n: usize| (1..=n).fold(BigUint::one(), |acc, i| acc * i);
    fact(3 * w) / (fact(w) * BigUint::from(6u32).pow(w as u32)) * BigUint::from(5u32).pow(w as u32)
}
