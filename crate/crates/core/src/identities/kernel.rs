use num_bigint::BigInt;
use num_traits::Zero;

use super::IdentityError;
use crate::linalg::{
    default_delta, integer_kernel_basis, lll_reduce, rank, IntEchelon, LatticeBasis,
};
use crate::symmetric::Permutation;
use crate::terms::{expand_poly, expansion_matrix, MonomialIndex, MultilinearPoly, OperationSymbol};

/// Result of the kernel search at one weight.
#[derive(Clone, Debug)]
pub struct KernelReport {
    pub weight: usize,
    pub ops: Vec<OperationSymbol>,
    /// LLL-reduced kernel lattice, sign-normalized and sorted by squared
    /// length, then lexicographically.
    pub reduced_basis: LatticeBasis,
    pub expansion_rank: usize,
    pub nullity: usize,
    /// Sorted squared lengths of the reduced basis.
    pub lengths: Vec<BigInt>,
}

impl KernelReport {
    pub fn columns(&self) -> usize {
        self.reduced_basis.dim()
    }

    pub fn index(&self) -> MonomialIndex {
        MonomialIndex::new(self.weight, self.ops.len())
    }

    /// Kernel row `i` as a polynomial.
    pub fn identity(&self, i: usize) -> MultilinearPoly {
        self.index().poly(
            &self.reduced_basis.vectors()[i]
                .iter()
                .map(|x| num_rational::BigRational::from_integer(x.clone()))
                .collect::<Vec<_>>(),
        )
    }
}

/// Expansion matrix, integer kernel via HNF, LLL reduction, normalization.
/// The HNF kernel rows are sorted by length before reduction; LLL output
/// depends on input order and short vectors first give shorter results.
pub fn kernel_pipeline(w: usize, ops: &[OperationSymbol]) -> Result<KernelReport, IdentityError> {
    if !(1..=2).contains(&w) {
        return Err(IdentityError::Unsupported(format!(
            "kernel search is implemented for weights 1 and 2, not {w}"
        )));
    }
    let x = expansion_matrix(w, ops)?;
    let expansion_rank = rank(&x);
    let kernel = integer_kernel_basis(&x)?;
    let nullity = kernel.len();
    debug_assert_eq!(nullity, x.cols() - expansion_rank);
    let mut rows = kernel.into_vectors();
    rows.sort_by_cached_key(|v| (v.iter().map(|a| a * a).sum::<BigInt>(), v.clone()));
    let sorted = LatticeBasis::new(x.cols(), rows)?;
    let reduced = lll_reduce(&sorted, &default_delta())?.sorted_normalized();
    let mut lengths = reduced.squared_lengths();
    lengths.sort();
    Ok(KernelReport {
        weight: w,
        ops: ops.to_vec(),
        reduced_basis: reduced,
        expansion_rank,
        nullity,
        lengths,
    })
}

/// True iff `f` expands to zero in the free associative triple system.
pub fn verify_identity(f: &MultilinearPoly, ops: &[OperationSymbol]) -> Result<bool, IdentityError> {
    Ok(expand_poly(f, ops)?.is_zero())
}

/// Column permutation induced by substituting x_i ↦ x_{σ(i)}: the
/// monomial in column c moves to column `map[c]`.
pub(crate) fn column_action(index: &MonomialIndex, sigma: &Permutation) -> Vec<usize> {
    let per: usize = (1..=index.degree()).product();
    let n = index.degree();
    let mut out = Vec::with_capacity(index.len());
    let leaf_ranks: Vec<usize> = (0..per)
        .map(|r| sigma.compose(&Permutation::from_lex_rank(n, r)).lex_rank())
        .collect();
    for t in 0..index.types().len() {
        out.extend(leaf_ranks.iter().map(|&r| t * per + r));
    }
    out
}

/// All column actions for S_n in lexicographic order.
pub(crate) fn all_column_actions(index: &MonomialIndex) -> Vec<Vec<usize>> {
    Permutation::all(index.degree())
        .iter()
        .map(|s| column_action(index, s))
        .collect()
}

pub(crate) fn act<T: Clone + Zero>(v: &[T], map: &[usize]) -> Vec<T> {
    let mut out = vec![T::zero(); v.len()];
    for (c, x) in v.iter().enumerate() {
        if !x.is_zero() {
            out[map[c]] = x.clone();
        }
    }
    out
}

/// Greedy scan of the reduced basis in order: a row is kept when it is not
/// in the span of the S_n-orbits of the rows kept before it.
pub fn minimal_module_generators(report: &KernelReport) -> Vec<usize> {
    let index = report.index();
    let actions = all_column_actions(&index);
    let mut span = IntEchelon::new(report.columns());
    let mut kept = Vec::new();
    for (i, v) in report.reduced_basis.vectors().iter().enumerate() {
        if span.contains(v.clone()) {
            continue;
        }
        kept.push(i);
        for a in &actions {
            span.insert(act(v, a));
        }
        if span.rank() == report.nullity {
            break;
        }
    }
    kept
}
