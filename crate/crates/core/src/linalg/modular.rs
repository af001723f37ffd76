//! Linear algebra over prime fields Z/p with p < 2^31.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{ExactMatrix, LinalgError};

/// Two primes above 2^30 used for dual-prime rank certification.
pub const PRIME_A: u64 = 2_147_483_647;
pub const PRIME_B: u64 = 2_147_483_629;

/// A prime modulus below 2^31 with a precomputed Barrett constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Modulus {
    p: u64,
    barrett: u64,
}

impl Modulus {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(LinalgError::BadModulus(p));
        }
        Ok(Modulus {
            p,
            barrett: (u64::MAX / p),
        })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces any x < 2^63.
    #[inline(always)]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline(always)]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    #[inline(always)]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        let r = x.rem_euclid(self.p as i64);
        r as u64
    }

    pub fn from_bigint(&self, x: &BigInt) -> u64 {
        let r = x.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }

    pub fn from_rational(&self, x: &num_rational::BigRational) -> Result<u64, LinalgError> {
        let d = self.from_bigint(x.denom());
        if d == 0 {
            return Err(LinalgError::PrimeDividesDenominator(self.p));
        }
        Ok(self.mul(self.from_bigint(x.numer()), self.inv(d)))
    }

    /// Symmetric lift of a residue into (−p/2, p/2].
    pub fn lift(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Incremental row echelon form over Z/p. Stored rows have leading entry 1
/// and are zero left of their pivot column.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    m: Modulus,
    cols: usize,
    rows: Vec<Vec<u32>>,
    pivot_col: Vec<usize>,
    pivot_of_col: Vec<Option<u32>>,
}

impl ModEchelon {
    pub fn new(m: Modulus, cols: usize) -> Self {
        ModEchelon {
            m,
            cols,
            rows: Vec::new(),
            pivot_col: Vec::new(),
            pivot_of_col: vec![None; cols],
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Stored echelon rows in insertion order.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Reduces a row in place; entries must already be residues.
    pub fn reduce(&self, row: &mut [u64]) {
        debug_assert_eq!(row.len(), self.cols);
        let m = self.m;
        for c in 0..self.cols {
            let x = row[c];
            if x == 0 {
                continue;
            }
            let Some(k) = self.pivot_of_col[c] else { continue };
            let p = &self.rows[k as usize];
            let f = m.p() - x;
            row[c] = 0;
            for (r, &y) in row[c + 1..].iter_mut().zip(&p[c + 1..]) {
                if y != 0 {
                    *r = m.reduce(*r + f * y as u64);
                }
            }
        }
    }

    /// Inserts a row of residues; returns true when the rank increased.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        self.reduce(&mut row);
        let Some(c) = row.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.m.inv(row[c]);
        let stored: Vec<u32> = row
            .iter()
            .enumerate()
            .map(|(j, &x)| if j < c || x == 0 { 0 } else { self.m.mul(x, inv) as u32 })
            .collect();
        self.pivot_of_col[c] = Some(self.rows.len() as u32);
        self.pivot_col.push(c);
        self.rows.push(stored);
        true
    }

    pub fn contains(&self, mut row: Vec<u64>) -> bool {
        self.reduce(&mut row);
        row.iter().all(|&x| x == 0)
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivot_col.clone();
        p.sort_unstable();
        p
    }

    /// Reduced row echelon form: rows sorted by pivot column, pivots 1.
    pub fn rref(&self) -> Vec<Vec<u64>> {
        let m = self.m;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivot_col[k]);
        let mut rows: Vec<Vec<u64>> = order
            .iter()
            .map(|&k| self.rows[k].iter().map(|&x| x as u64).collect())
            .collect();
        let pivots: Vec<usize> = order.iter().map(|&k| self.pivot_col[k]).collect();
        for i in (0..rows.len()).rev() {
            let c = pivots[i];
            let (upper, lower) = rows.split_at_mut(i);
            let p = &lower[0];
            for r in upper.iter_mut() {
                let x = r[c];
                if x == 0 {
                    continue;
                }
                let f = m.p() - x;
                for j in c..self.cols {
                    if p[j] != 0 {
                        r[j] = m.reduce(r[j] + f * p[j]);
                    }
                }
            }
        }
        rows
    }

    /// Basis of {v : A v = 0} over Z/p, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let rref = self.rref();
        let pivots = self.pivot_columns();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1;
                for (r, &c) in rref.iter().zip(&pivots) {
                    v[c] = self.m.neg(r[f]);
                }
                v
            })
            .collect()
    }
}

pub fn matrix_mod_p(m: &ExactMatrix, modulus: Modulus) -> Result<Vec<Vec<u64>>, LinalgError> {
    m.row_iter()
        .map(|r| r.iter().map(|x| modulus.from_rational(x)).collect())
        .collect()
}

/// Rank of `m` over the field with `p` elements.
pub fn rank_mod_p(m: &ExactMatrix, p: u64) -> Result<usize, LinalgError> {
    let modulus = Modulus::new(p)?;
    let mut e = ModEchelon::new(modulus, m.cols());
    for row in matrix_mod_p(m, modulus)? {
        e.insert(row);
    }
    Ok(e.rank())
}

/// Ranks modulo two different primes must agree, otherwise an error is
/// returned (one of the primes is unlucky for this matrix).
pub fn dual_prime_rank(m: &ExactMatrix) -> Result<usize, LinalgError> {
    let a = rank_mod_p(m, PRIME_A)?;
    let b = rank_mod_p(m, PRIME_B)?;
    if a != b {
        return Err(LinalgError::PrimeDisagreement { a, b });
    }
    Ok(a)
}

pub fn is_zero_mod(v: &[u64]) -> bool {
    v.iter().all(Zero::is_zero)
}
