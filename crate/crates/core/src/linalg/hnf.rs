//! Row-style Hermite normal form with unimodular transform.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactMatrix, LatticeBasis, LinalgError};

/// Integer HNF on plain row vectors. Returns (h, u) with u·m = h.
pub(crate) fn hnf_rows(m: &[Vec<BigInt>], cols: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let n = m.len();
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut r = vec![BigInt::zero(); n];
            r[i] = BigInt::one();
            r
        })
        .collect();

    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        loop {
            // Smallest nonzero |entry| in column c at or below row r.
            let best = (r..n)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&a, &b| h[a][c].abs().cmp(&h[b][c].abs()).then(a.cmp(&b)));
            let Some(best) = best else { break };
            h.swap(r, best);
            u.swap(r, best);
            if h[r][c].is_negative() {
                negate(&mut h[r]);
                negate(&mut u[r]);
            }
            let mut clean = true;
            for i in r + 1..n {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                sub_multiple(&mut h, i, r, &q, c);
                sub_multiple(&mut u, i, r, &q, 0);
                if !h[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if r < n && !h[r][c].is_zero() {
            for i in 0..r {
                let q = h[i][c].div_floor(&h[r][c]);
                if !q.is_zero() {
                    sub_multiple(&mut h, i, r, &q, c);
                    sub_multiple(&mut u, i, r, &q, 0);
                }
            }
            r += 1;
        }
    }
    (h, u)
}

fn negate(row: &mut [BigInt]) {
    for x in row.iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// rows[i] -= q * rows[k], touching columns from `start` on.
fn sub_multiple(rows: &mut [Vec<BigInt>], i: usize, k: usize, q: &BigInt, start: usize) {
    let (a, b) = if i < k {
        let (lo, hi) = rows.split_at_mut(k);
        (&mut lo[i], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(i);
        (&mut hi[0], &lo[k])
    };
    if q.is_one() {
        for (x, y) in a[start..].iter_mut().zip(&b[start..]) {
            if !y.is_zero() {
                *x -= y;
            }
        }
    } else {
        for (x, y) in a[start..].iter_mut().zip(&b[start..]) {
            if !y.is_zero() {
                *x -= q * y;
            }
        }
    }
}

/// Hermite normal form of an integer matrix: returns (h, u) with u unimodular,
/// u·m = h, h in row-style HNF (positive pivots, entries above pivots reduced
/// into [0, pivot)), zero rows at the bottom.
pub fn hnf_with_transform(m: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix), LinalgError> {
    let rows = m.to_int_rows()?;
    let (h, u) = hnf_rows(&rows, m.cols());
    Ok((
        ExactMatrix::from_int_rows(m.cols(), &h)?,
        ExactMatrix::from_int_rows(m.rows(), &u)?,
    ))
}

/// Basis of the full integer lattice {v ∈ Z^cols : m·v = 0}, read off from
/// the rows of the HNF transform of mᵗ that map to zero rows.
pub fn integer_kernel_basis(m: &ExactMatrix) -> Result<LatticeBasis, LinalgError> {
    let t = m.transpose().to_int_rows()?;
    let (h, u) = hnf_rows(&t, m.rows());
    let vectors: Vec<Vec<BigInt>> = h
        .iter()
        .zip(u)
        .filter(|(hr, _)| hr.iter().all(Zero::is_zero))
        .map(|(_, ur)| ur)
        .collect();
    LatticeBasis::new_unchecked(m.cols(), vectors)
}
