//! Integral LLL reduction (all Gram–Schmidt data kept as exact integers).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{LatticeBasis, LinalgError};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Rounds a/b to the nearest integer (b > 0), halves rounded up.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (a * &two + b).div_floor(&(b * &two))
}

struct State {
    b: Vec<Vec<BigInt>>,
    // d[0] = 1, d[i] = Gram determinant of the first i vectors.
    d: Vec<BigInt>,
    // lambda[k][j] = d[j+1] * mu[k][j] for j < k.
    lambda: Vec<Vec<BigInt>>,
}

impl State {
    fn size_reduce(&mut self, k: usize, l: usize) {
        let two_lambda: BigInt = &self.lambda[k][l] * 2;
        if two_lambda.abs() <= self.d[l + 1] {
            return;
        }
        let q = round_div(&self.lambda[k][l], &self.d[l + 1]);
        let (lo, hi) = self.b.split_at_mut(k);
        for (x, y) in hi[0].iter_mut().zip(&lo[l]) {
            if !y.is_zero() {
                *x -= &q * y;
            }
        }
        let dl = self.d[l + 1].clone();
        self.lambda[k][l] -= &q * dl;
        for i in 0..l {
            let t = &q * &self.lambda[l][i];
            self.lambda[k][i] -= t;
        }
    }

    fn swap(&mut self, k: usize, kmax: usize) {
        self.b.swap(k, k - 1);
        for j in 0..k - 1 {
            let t = std::mem::take(&mut self.lambda[k][j]);
            self.lambda[k][j] = std::mem::replace(&mut self.lambda[k - 1][j], t);
        }
        let lam = self.lambda[k][k - 1].clone();
        let bnew = (&self.d[k - 1] * &self.d[k + 1] + &lam * &lam) / &self.d[k];
        for i in k + 1..=kmax {
            let t = self.lambda[i][k].clone();
            let new_ik = (&self.d[k + 1] * &self.lambda[i][k - 1] - &lam * &t) / &self.d[k];
            let new_ik1 = (&bnew * &t + &lam * &new_ik) / &self.d[k + 1];
            self.lambda[i][k] = new_ik;
            self.lambda[i][k - 1] = new_ik1;
        }
        self.d[k] = bnew;
    }
}

/// δ-LLL reduction of a basis of independent integer vectors (δ in (1/4, 1]).
pub fn lll_reduce(basis: &LatticeBasis, delta: &BigRational) -> Result<LatticeBasis, LinalgError> {
    let n = basis.len();
    if n == 0 {
        return Ok(basis.clone());
    }
    let dn = delta.numer().clone();
    let dd = delta.denom().clone();
    let mut s = State {
        b: basis.vectors().to_vec(),
        d: vec![BigInt::zero(); n + 1],
        lambda: (0..n).map(|k| vec![BigInt::zero(); k]).collect(),
    };
    s.d[0] = BigInt::from(1);
    s.d[1] = dot(&s.b[0], &s.b[0]);
    if s.d[1].is_zero() {
        return Err(LinalgError::DependentVectors);
    }
    let mut k = 1;
    let mut kmax = 0;
    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&s.b[k], &s.b[j]);
                for i in 0..j {
                    u = (&s.d[i + 1] * &u - &s.lambda[k][i] * &s.lambda[j][i]) / &s.d[i];
                }
                if j < k {
                    s.lambda[k][j] = u;
                } else {
                    if u.is_zero() {
                        return Err(LinalgError::DependentVectors);
                    }
                    s.d[k + 1] = u;
                }
            }
        }
        s.size_reduce(k, k - 1);
        // Lovász: d_{k+1} d_{k-1} >= δ d_k^2 − λ^2, scaled by the denominator of δ.
        let lam = &s.lambda[k][k - 1];
        let lhs = &dd * (&s.d[k + 1] * &s.d[k - 1] + lam * lam);
        let rhs = &dn * (&s.d[k] * &s.d[k]);
        if lhs < rhs {
            s.swap(k, kmax);
            k = (k - 1).max(1);
        } else {
            for l in (0..k - 1).rev() {
                s.size_reduce(k, l);
            }
            k += 1;
        }
    }
    LatticeBasis::new_unchecked(basis.dim(), s.b)
}

/// Checks size reduction (|μ_kj| ≤ 1/2) and the Lovász condition using
/// rational Gram–Schmidt data. Independent of the integral algorithm above.
pub fn is_lll_reduced(basis: &LatticeBasis, delta: &BigRational) -> bool {
    let n = basis.len();
    let vs: Vec<Vec<BigRational>> = basis
        .vectors()
        .iter()
        .map(|v| v.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let rdot = |a: &[BigRational], b: &[BigRational]| -> BigRational {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    };
    let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut norms: Vec<BigRational> = Vec::with_capacity(n);
    let half = BigRational::new(1.into(), 2.into());
    for k in 0..n {
        let mut s = vs[k].clone();
        let mut mu_prev = BigRational::zero();
        for j in 0..k {
            let mu = rdot(&vs[k], &star[j]) / &norms[j];
            if mu.abs() > half {
                return false;
            }
            for (x, y) in s.iter_mut().zip(&star[j]) {
                *x -= &mu * y;
            }
            if j + 1 == k {
                mu_prev = mu;
            }
        }
        let nk = rdot(&s, &s);
        if k > 0 && nk < (delta - &mu_prev * &mu_prev) * &norms[k - 1] {
            return false;
        }
        star.push(s);
        norms.push(nk);
    }
    true
}
