use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::groebner::GroebnerBasis;
use super::poly::{NCPoly, NCWord};
use super::EnvelopeError;
use crate::linalg::IntEchelon;

type Vector = Vec<BigRational>;

/// A finite-dimensional algebra given by a basis of normal words and the
/// normal forms of all pairwise products.
#[derive(Debug, Clone)]
pub struct FiniteAlgebra {
    basis: Vec<NCWord>,
    index: HashMap<NCWord, usize>,
    /// table[i][j] = coordinates of basis[i]·basis[j].
    table: Vec<Vec<Vector>>,
}

impl FiniteAlgebra {
    /// Fails unless the normal words stop before `max_degree`.
    pub fn from_groebner(gb: &GroebnerBasis, max_degree: usize) -> Result<Self, EnvelopeError> {
        let (basis, finite) = gb.normal_words(max_degree);
        if !finite {
            return Err(EnvelopeError::Infinite(max_degree));
        }
        let index: HashMap<NCWord, usize> =
            basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let n = basis.len();
        let mut alg = FiniteAlgebra {
            basis,
            index,
            table: Vec::new(),
        };
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let p = gb.normal_form(&NCPoly::from_word(alg.basis[i].concat(&alg.basis[j])));
                table[i][j] = alg.coords(&p)?;
            }
        }
        alg.table = table;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[NCWord] {
        &self.basis
    }

    /// Coordinates of a polynomial already in normal form.
    pub fn coords(&self, p: &NCPoly) -> Result<Vector, EnvelopeError> {
        let mut v = vec![BigRational::zero(); self.dim()];
        for (w, c) in p.terms() {
            let i = self
                .index
                .get(w)
                .ok_or_else(|| EnvelopeError::NotReduced(w.to_string()))?;
            v[*i] = c.clone();
        }
        Ok(v)
    }

    pub fn element(&self, v: &[BigRational]) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w, c) in self.basis.iter().zip(v) {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    /// Coordinates of basis[i]·basis[j].
    pub fn product(&self, i: usize, j: usize) -> &[BigRational] {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &[BigRational], y: &[BigRational]) -> Vector {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o += &ab * t;
                    }
                }
            }
        }
        out
    }

    pub fn one(&self) -> Vector {
        let mut v = vec![BigRational::zero(); self.dim()];
        v[self.index[&NCWord::one()]] = BigRational::one();
        v
    }

    /// Nonzero products basis[i]·basis[j] with i, j ≠ 1.
    pub fn nonzero_products(&self) -> Vec<(NCWord, NCWord, NCPoly)> {
        let unit = self.index[&NCWord::one()];
        let mut out = Vec::new();
        for i in (0..self.dim()).filter(|&i| i != unit) {
            for j in (0..self.dim()).filter(|&j| j != unit) {
                let p = self.element(&self.table[i][j]);
                if !p.is_zero() {
                    out.push((self.basis[i].clone(), self.basis[j].clone(), p));
                }
            }
        }
        out
    }

    pub fn is_central(&self, x: &[BigRational]) -> bool {
        (0..self.dim()).all(|j| {
            let e = unit_vector(self.dim(), j);
            self.mul(x, &e) == self.mul(&e, x)
        })
    }

    /// Basis of the center, in reduced echelon form.
    pub fn center(&self) -> Vec<Vector> {
        let n = self.dim();
        // Σ_k z_k (T[k][j] − T[j][k]) = 0 for every j and output coordinate.
        let mut e = IntEchelon::new(n);
        for j in 0..n {
            for m in 0..n {
                let row: Vector = (0..n)
                    .map(|k| &self.table[k][j][m] - &self.table[j][k][m])
                    .collect();
                e.insert_rational(&row);
            }
        }
        reduced_basis(e.nullspace_rows())
    }

    /// Matrix of left multiplication by x, acting on coordinate columns.
    fn trace_of_left_mul(&self, x: &[BigRational]) -> BigRational {
        let mut t = BigRational::zero();
        for (k, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for j in 0..self.dim() {
                t += a * &self.table[k][j][j];
            }
        }
        t
    }

    /// Radical: {x : Tr(L_{xy}) = 0 for all y}.
    pub fn radical(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut e = IntEchelon::new(n);
        for j in 0..n {
            let y = unit_vector(n, j);
            let row: Vector = (0..n)
                .map(|i| self.trace_of_left_mul(&self.mul(&unit_vector(n, i), &y)))
                .collect();
            e.insert_rational(&row);
        }
        reduced_basis(e.nullspace_rows())
    }

    /// Monic minimal polynomial of x inside the algebra with identity `unit`
    /// (coefficients from degree 0 up).
    pub fn minimal_polynomial(&self, x: &[BigRational], unit: &[BigRational]) -> Vec<BigRational> {
        let mut powers = vec![unit.to_vec()];
        let mut e = IntEchelon::new(self.dim());
        e.insert_rational(unit);
        loop {
            let next = self.mul(powers.last().expect("nonempty"), x);
            let independent = e.insert_rational(&next);
            powers.push(next);
            if !independent {
                break;
            }
        }
        // Dependency among the columns p_0..p_k; the last coefficient is free.
        let k = powers.len();
        let mut dep = IntEchelon::new(k);
        for m in 0..self.dim() {
            let row: Vector = powers.iter().map(|p| p[m].clone()).collect();
            dep.insert_rational(&row);
        }
        let null = dep.nullspace_rows();
        let v = null
            .into_iter()
            .find(|v| !v[k - 1].is_zero())
            .expect("last power is dependent");
        let lead = v[k - 1].clone();
        v.into_iter().map(|c| c / &lead).collect()
    }

    /// Dimension of the subspace e·A.
    pub fn ideal_dimension(&self, e: &[BigRational]) -> usize {
        let mut ech = IntEchelon::new(self.dim());
        for j in 0..self.dim() {
            ech.insert_rational(&self.mul(e, &unit_vector(self.dim(), j)));
        }
        ech.rank()
    }

    /// Radical, center, and the splitting of 1 into primitive central
    /// idempotents found from rational roots of minimal polynomials.
    pub fn wedderburn(&self) -> WedderburnReport {
        let center = self.center();
        let radical = self.radical();
        let mut idempotents = vec![self.one()];
        let mut split = true;
        for z in &center {
            let mut next = Vec::new();
            for e in &idempotents {
                let ze = self.mul(z, e);
                let m = self.minimal_polynomial(&ze, e);
                let roots = rational_roots(&m);
                if roots.len() + 1 != m.len() {
                    split = false;
                    next.push(e.clone());
                    continue;
                }
                for (i, r) in roots.iter().enumerate() {
                    // Lagrange idempotent Π_{j≠i} (ze − r_j e)/(r_i − r_j).
                    let mut acc = e.clone();
                    for (_, s) in roots.iter().enumerate().filter(|&(j, _)| j != i) {
                        let factor: Vector = ze
                            .iter()
                            .zip(e)
                            .map(|(a, b)| (a - s * b) / (r - s))
                            .collect();
                        acc = self.mul(&acc, &factor);
                    }
                    next.push(acc);
                }
            }
            idempotents = next;
        }
        let mut parts: Vec<(usize, NCPoly)> = idempotents
            .iter()
            .map(|e| (self.ideal_dimension(e), self.element(e)))
            .collect();
        parts.sort();
        WedderburnReport {
            dimension: self.dim(),
            radical_dim: radical.len(),
            center: center.iter().map(|v| self.element(v)).collect(),
            idempotents: parts.iter().map(|(_, e)| e.clone()).collect(),
            ideal_dims: parts.iter().map(|(d, _)| *d).collect(),
            split_over_rationals: split,
        }
    }
}

/// Structure of a finite-dimensional algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnReport {
    pub dimension: usize,
    pub radical_dim: usize,
    pub center: Vec<NCPoly>,
    pub idempotents: Vec<NCPoly>,
    pub ideal_dims: Vec<usize>,
    /// False if some minimal polynomial had a non-rational or repeated root.
    pub split_over_rationals: bool,
}

impl WedderburnReport {
    pub fn is_semisimple(&self) -> bool {
        self.radical_dim == 0
    }
}

fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![BigRational::zero(); n];
    v[i] = BigRational::one();
    v
}

fn reduced_basis(rows: Vec<Vector>) -> Vec<Vector> {
    let Some(n) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut e = IntEchelon::new(n);
    for r in &rows {
        e.insert_rational(r);
    }
    e.rref_rows()
}

/// Distinct rational roots of a polynomial (coefficients from degree 0 up),
/// in increasing order.
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    if ints.len() <= 1 {
        return roots;
    }
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
        let skip = ints.iter().take_while(|c| c.is_zero()).count();
        ints.drain(..skip);
    }
    let eval = |x: &BigRational| {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    };
    let a0 = ints[0].abs();
    let an = ints.last().expect("nonempty").abs();
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for s in [-1, 1] {
                let x = BigRational::new(BigInt::from(s) * &p, q.clone());
                if eval(&x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.to_u64().expect("small coefficient");
    (1..=n)
        .take_while(|d| d * d <= n)
        .filter(|d| n % d == 0)
        .flat_map(|d| [d, n / d])
        .map(BigInt::from)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn roots() {
        // t^2 − t
        assert_eq!(rational_roots(&[q(0), q(-1), q(1)]), vec![q(0), q(1)]);
        // 2t^2 − 1 has no rational roots
        assert!(rational_roots(&[q(-1), q(0), q(2)]).is_empty());
        // (t − 1/2)(t + 3) = t^2 + 5/2 t − 3/2
        let r = rational_roots(&[q(-3) / q(2), q(5) / q(2), q(1)]);
        assert_eq!(r, vec![q(-3), q(1) / q(2)]);
    }
}
