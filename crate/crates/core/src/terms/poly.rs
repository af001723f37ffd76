use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::tree::is_op;
use super::{association_types, AssociationType, OperationSymbol, TermsError, TreeMonomial};
use crate::symmetric::Permutation;

/// Formal rational combination of multilinear tree monomials of one degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultilinearPoly {
    degree: usize,
    terms: BTreeMap<TreeMonomial, BigRational>,
}

impl MultilinearPoly {
    pub fn zero(degree: usize) -> Self {
        assert!(degree % 2 == 1, "multilinear ternary terms have odd degree");
        MultilinearPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(m: TreeMonomial) -> Self {
        let mut p = Self::zero(m.degree());
        p.add_term(m, BigRational::one());
        p
    }

    /// The single operation ω(x1, x2, x3) as a polynomial.
    pub fn operation(op: usize) -> Self {
        Self::from_monomial(TreeMonomial::operation(op))
    }

    /// The polynomial x1 of degree 1.
    pub fn variable() -> Self {
        Self::from_monomial(TreeMonomial::variable())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn weight(&self) -> usize {
        (self.degree - 1) / 2
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

    pub fn terms(&self) -> impl Iterator<Item = (&TreeMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &TreeMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: TreeMonomial, c: BigRational) {
        assert_eq!(m.degree(), self.degree, "degree mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.degree);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Variable substitution x_i ↦ x_{p(i)}.
    pub fn apply_permutation(&self, p: &Permutation) -> Self {
        assert_eq!(p.degree(), self.degree, "degree mismatch");
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.terms {
            out.add_term(m.substitute(p), c.clone());
        }
        out
    }

    /// Human-readable form, e.g. "[x,y,z] + [y,x,z]".
    pub fn display(&self, ops: &[OperationSymbol]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                s.push_str(&a.to_string());
                s.push('*');
            }
            s.push_str(&m.display(ops));
        }
        s
    }
}

impl std::fmt::Debug for MultilinearPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl Add for &MultilinearPoly {
    type Output = MultilinearPoly;
    fn add(self, rhs: &MultilinearPoly) -> MultilinearPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MultilinearPoly {
    type Output = MultilinearPoly;
    fn neg(self) -> MultilinearPoly {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &MultilinearPoly {
    type Output = MultilinearPoly;
    fn sub(self, rhs: &MultilinearPoly) -> MultilinearPoly {
        self + &(-rhs)
    }
}

/// Variable substitution x_i ↦ x_{p(i)} applied to every monomial.
pub fn apply_permutation(p: &Permutation, f: &MultilinearPoly) -> MultilinearPoly {
    f.apply_permutation(p)
}

/// f ∘_k g: substitutes g into argument slot k (1-based) of f. Variables of
/// f before slot k keep their index, g's variables follow, and the remaining
/// variables of f are shifted past them.
pub fn partial_composition(
    f: &MultilinearPoly,
    k: usize,
    g: &MultilinearPoly,
) -> Result<MultilinearPoly, TermsError> {
    let nf = f.degree();
    let ng = g.degree();
    if k == 0 || k > nf {
        return Err(TermsError::SlotOutOfRange { slot: k, degree: nf });
    }
    let slot = (k - 1) as u8;
    let shift = (ng - 1) as u8;
    let mut out = MultilinearPoly::zero(nf + ng - 1);
    for (mf, cf) in &f.terms {
        for (mg, cg) in &g.terms {
            let mut tokens = Vec::with_capacity(mf.0.len() + mg.0.len() - 1);
            for &t in &mf.0 {
                if is_op(t) || t < slot {
                    tokens.push(t);
                } else if t == slot {
                    tokens.extend(mg.0.iter().map(|&u| if is_op(u) { u } else { u + slot }));
                } else {
                    tokens.push(t + shift);
                }
            }
            out.add_term(TreeMonomial::from_tokens(tokens), cf * cg);
        }
    }
    Ok(out)
}

/// All consequences J ∘_k ω (every slot k of J) and ω ∘_k J (k = 1, 2, 3)
/// for every identity J and operation ω. For each J the order is: J ∘_k ω
/// grouped by ω then k, followed by ω ∘_k J grouped the same way.
pub fn consequence_set(
    identities: &[MultilinearPoly],
    target_w: usize,
    n_ops: usize,
) -> Result<Vec<MultilinearPoly>, TermsError> {
    let mut out = Vec::new();
    for j in identities {
        if j.weight() + 1 != target_w {
            return Err(TermsError::WeightMismatch {
                expected: target_w.saturating_sub(1),
                found: j.weight(),
            });
        }
        for op in 0..n_ops {
            let w = MultilinearPoly::operation(op);
            for k in 1..=j.degree() {
                out.push(partial_composition(j, k, &w)?);
            }
        }
        for op in 0..n_ops {
            let w = MultilinearPoly::operation(op);
            for k in 1..=3 {
                out.push(partial_composition(&w, k, j)?);
            }
        }
    }
    Ok(out)
}

/// Column indexing of all tree monomials of weight w: type-major, leaf
/// permutations in lexicographic order within each type.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    weight: usize,
    types: Vec<AssociationType>,
    type_pos: HashMap<AssociationType, usize>,
    perms_per_type: usize,
}

impl MonomialIndex {
    pub fn new(w: usize, n_ops: usize) -> Self {
        let types = association_types(w, n_ops);
        let type_pos = types.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let perms_per_type = (1..=2 * w + 1).product();
        MonomialIndex {
            weight: w,
            types,
            type_pos,
            perms_per_type,
        }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn degree(&self) -> usize {
        2 * self.weight + 1
    }

    pub fn types(&self) -> &[AssociationType] {
        &self.types
    }

    pub fn type_index(&self, t: &AssociationType) -> Option<usize> {
        self.type_pos.get(t).copied()
    }

    pub fn len(&self) -> usize {
        self.types.len() * self.perms_per_type
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn column(&self, m: &TreeMonomial) -> usize {
        let t = self
            .type_index(&m.association_type())
            .expect("monomial type belongs to this index");
        t * self.perms_per_type + m.leaves().lex_rank()
    }

    pub fn monomial(&self, col: usize) -> TreeMonomial {
        let t = &self.types[col / self.perms_per_type];
        let p = Permutation::from_lex_rank(self.degree(), col % self.perms_per_type);
        TreeMonomial::new(t, &p)
    }

    /// Dense coefficient vector of f in this basis.
    pub fn vector(&self, f: &MultilinearPoly) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.len()];
        for (m, c) in f.terms() {
            v[self.column(m)] = c.clone();
        }
        v
    }

    pub fn poly(&self, v: &[BigRational]) -> MultilinearPoly {
        let mut f = MultilinearPoly::zero(self.degree());
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                f.add_term(self.monomial(i), c.clone());
            }
        }
        f
    }
}

