//! Fraction-free row echelon forms over the integers.
//!
//! Rows are kept primitive (content 1, positive pivot). A row that is zero
//! to the left of its pivot column is called a pivot row; every stored row
//! has zeros in all pivot columns that existed when it was inserted, and
//! zeros left of its own pivot, so reduction can sweep columns left to right.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{make_primitive, primitive_from_rational};
use super::ExactMatrix;

#[derive(Clone, Debug)]
pub struct IntEchelon {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
    pivot_col: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
}

impl IntEchelon {
    pub fn new(cols: usize) -> Self {
        IntEchelon {
            cols,
            rows: Vec::new(),
            pivot_col: Vec::new(),
            pivot_of_col: vec![None; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored pivots. The result is a nonzero
    /// integer multiple of (row − combination of pivot rows), made primitive.
    pub fn reduce(&self, mut row: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        for c in 0..self.cols {
            if row[c].is_zero() {
                continue;
            }
            let Some(k) = self.pivot_of_col[c] else { continue };
            let p = &self.rows[k];
            let lead = &p[c];
            if lead.is_one() {
                let f = row[c].clone();
                for j in c..self.cols {
                    if !p[j].is_zero() {
                        row[j] -= &f * &p[j];
                    }
                }
            } else {
                let g = lead.gcd(&row[c]);
                let a = lead / &g;
                let b = &row[c] / &g;
                for j in c..self.cols {
                    if !row[j].is_zero() {
                        row[j] *= &a;
                    }
                    if !p[j].is_zero() {
                        row[j] -= &b * &p[j];
                    }
                }
                for x in &mut row[..c] {
                    *x *= &a;
                }
                make_primitive(&mut row);
            }
        }
        row
    }

    /// Inserts a row; returns true when the rank increased.
    pub fn insert(&mut self, row: Vec<BigInt>) -> bool {
        let mut r = self.reduce(row);
        let Some(c) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut r);
        if r[c].is_negative() {
            for x in r.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        self.pivot_of_col[c] = Some(self.rows.len());
        self.pivot_col.push(c);
        self.rows.push(r);
        true
    }

    pub fn insert_rational(&mut self, row: &[BigRational]) -> bool {
        self.insert(primitive_from_rational(row))
    }

    pub fn contains(&self, row: Vec<BigInt>) -> bool {
        self.reduce(row).iter().all(Zero::is_zero)
    }

    pub fn contains_rational(&self, row: &[BigRational]) -> bool {
        self.contains(primitive_from_rational(row))
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivot_col.clone();
        p.sort_unstable();
        p
    }

    /// Reduced row echelon form of the stored row space: one row per pivot,
    /// sorted by pivot column, pivots equal to 1.
    pub fn rref_rows(&self) -> Vec<Vec<BigRational>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivot_col[k]);
        let mut rows: Vec<Vec<BigInt>> = order.iter().map(|&k| self.rows[k].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&k| self.pivot_col[k]).collect();
        // Clear entries above each pivot, last pivot first.
        for i in (0..rows.len()).rev() {
            let c = pivots[i];
            let (upper, lower) = rows.split_at_mut(i);
            let p = &lower[0];
            for r in upper.iter_mut() {
                if r[c].is_zero() {
                    continue;
                }
                let g = p[c].gcd(&r[c]);
                let a = &p[c] / &g;
                let b = &r[c] / &g;
                for j in 0..self.cols {
                    if !a.is_one() && !r[j].is_zero() {
                        r[j] *= &a;
                    }
                    if !p[j].is_zero() {
                        r[j] -= &b * &p[j];
                    }
                }
                make_primitive(r);
            }
        }
        rows.iter()
            .zip(&pivots)
            .map(|(r, &c)| {
                let lead = r[c].clone();
                r.iter()
                    .map(|x| BigRational::new(x.clone(), lead.clone()))
                    .collect()
            })
            .collect()
    }

    /// Basis of the right nullspace {v : A v = 0} of the stored rows, one
    /// vector per free column, with a 1 in that column.
    pub fn nullspace_rows(&self) -> Vec<Vec<BigRational>> {
        let rref = self.rref_rows();
        let pivots = self.pivot_columns();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (r, &c) in rref.iter().zip(&pivots) {
                    v[c] = -r[f].clone();
                }
                v
            })
            .collect()
    }
}

/// Row canonical form (reduced row echelon form) and rank.
/// The result has the same shape as `m`, with zero rows at the bottom.
pub fn rcf(m: &ExactMatrix) -> (ExactMatrix, usize) {
    let mut e = IntEchelon::new(m.cols());
    for r in m.row_iter() {
        e.insert_rational(r);
    }
    let rows = e.rref_rows();
    let rank = rows.len();
    let mut out = ExactMatrix::zeros(m.rows(), m.cols());
    for (i, r) in rows.into_iter().enumerate() {
        for (j, x) in r.into_iter().enumerate() {
            out.set(i, j, x);
        }
    }
    (out, rank)
}

pub fn rank(m: &ExactMatrix) -> usize {
    let mut e = IntEchelon::new(m.cols());
    for r in m.row_iter() {
        e.insert_rational(r);
    }
    e.rank()
}

/// True iff every row of `b` lies in the rational row space of `a`,
/// decided by comparing rank(a) with rank of `a` stacked on `b`.
pub fn row_space_contained(a: &ExactMatrix, b: &ExactMatrix) -> bool {
    assert_eq!(a.cols(), b.cols(), "column counts differ");
    let mut e = IntEchelon::new(a.cols());
    for r in a.row_iter() {
        e.insert_rational(r);
    }
    let before = e.rank();
    for r in b.row_iter() {
        if e.insert_rational(r) {
            return false;
        }
    }
    e.rank() == before
}

/// Basis of the right nullspace {v : m v = 0} as rows of a matrix.
pub fn nullspace(m: &ExactMatrix) -> ExactMatrix {
    let mut e = IntEchelon::new(m.cols());
    for r in m.row_iter() {
        e.insert_rational(r);
    }
    ExactMatrix::from_rows(m.cols(), e.nullspace_rows()).expect("rows have matrix width")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rcf_small() {
        let m = ExactMatrix::from_i64(&[&[2, 4, 2], &[1, 3, 2], &[3, 7, 4]]);
        let (r, k) = rcf(&m);
        assert_eq!(k, 2);
        assert_eq!(r, ExactMatrix::from_i64(&[&[1, 0, -1], &[0, 1, 1], &[0, 0, 0]]));
    }

    #[test]
    fn rcf_with_fractional_pivot_ratios() {
        let m = ExactMatrix::from_i64(&[&[2, 1], &[4, 3]]);
        assert_eq!(rcf(&m).0, ExactMatrix::identity(2));
        let m = ExactMatrix::from_i64(&[&[2, 3, 1]]);
        let (r, _) = rcf(&m);
        assert_eq!(r.row(0), &[q(1, 1), q(3, 2), q(1, 2)]);
    }

    #[test]
    fn empty_and_zero_matrices() {
        assert_eq!(rcf(&ExactMatrix::zeros(0, 3)).1, 0);
        assert_eq!(rcf(&ExactMatrix::zeros(3, 3)).1, 0);
        assert_eq!(nullspace(&ExactMatrix::zeros(2, 2)), ExactMatrix::identity(2));
    }

    #[test]
    fn nullspace_annihilates() {
        let m = ExactMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let n = nullspace(&m);
        assert_eq!(n.rows(), 2);
        assert!(m.mul(&n.transpose()).unwrap().is_zero());
    }

    #[test]
    fn containment() {
        let a = ExactMatrix::from_i64(&[&[1, 1, 0]]);
        assert!(row_space_contained(&a, &ExactMatrix::from_i64(&[&[3, 3, 0]])));
        assert!(!row_space_contained(&a, &ExactMatrix::from_i64(&[&[0, 1, 0]])));
        assert!(row_space_contained(&ExactMatrix::identity(3), &ExactMatrix::from_i64(&[&[5, -1, 2]])));
    }
}
