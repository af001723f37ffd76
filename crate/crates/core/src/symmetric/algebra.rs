use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::Permutation;

/// Element of the rational group algebra Q[S_n], stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_perm(p: Permutation) -> Self {
        let mut x = Self::zero(p.degree());
        x.add_term(p, BigRational::from_integer(1.into()));
        x
    }

    /// Builds an element from (coefficient, one-line images) pairs.
    pub fn from_int_terms(n: usize, terms: &[(i64, &[usize])]) -> Self {
        let mut x = Self::zero(n);
        for (c, images) in terms {
            let p = Permutation::from_one_line(images).expect("valid permutation");
            assert_eq!(p.degree(), n, "degree mismatch");
            x.add_term(p, BigRational::from_integer((*c).into()));
        }
        x
    }

    /// Sum of all permutations of degree n.
    pub fn symmetrizer(n: usize) -> Self {
        let mut x = Self::zero(n);
        for p in Permutation::all(n) {
            x.add_term(p, BigRational::from_integer(1.into()));
        }
        x
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> BigRational {
        self.terms.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, p: Permutation, c: BigRational) {
        assert_eq!(p.degree(), self.n, "degree mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
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
        let mut out = Self::zero(self.n);
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        self.scale(&BigRational::from_integer((-1).into()))
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        self + &(-rhs)
    }
}

/// Convolution product: (Σ a_p p)(Σ b_q q) = Σ a_p b_q (p·q).
impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                out.add_term(p.compose(q), a * b);
            }
        }
        out
    }
}
