use num_bigint::BigInt;
use num_rational::BigRational;

use super::kernel::{act, all_column_actions, kernel_pipeline, verify_identity};
use super::{IdentityError, KnownIdentity};
use crate::linalg::{primitive_from_rational, rank, IntEchelon, ModEchelon, Modulus, PRIME_A, PRIME_B};
use crate::terms::{
    consequence_set, expansion_matrix, MonomialIndex, MultilinearPoly, OperationSymbol,
};

/// Widths above this switch module spans from exact to modular arithmetic.
const EXACT_COLUMN_LIMIT: usize = 400;

/// The S_n-module spanned by a growing set of polynomials of one weight.
/// Exact below [`EXACT_COLUMN_LIMIT`] columns; otherwise tracked modulo
/// two primes that must agree.
pub struct ModuleSpan {
    index: MonomialIndex,
    actions: Vec<Vec<usize>>,
    inner: SpanInner,
}

enum SpanInner {
    Exact(IntEchelon),
    Modular(ModEchelon, ModEchelon),
}

impl ModuleSpan {
    pub fn new(w: usize, n_ops: usize) -> Self {
        let index = MonomialIndex::new(w, n_ops);
        let actions = all_column_actions(&index);
        let cols = index.len();
        let inner = if cols <= EXACT_COLUMN_LIMIT {
            SpanInner::Exact(IntEchelon::new(cols))
        } else {
            SpanInner::Modular(
                ModEchelon::new(Modulus::new(PRIME_A).expect("prime"), cols),
                ModEchelon::new(Modulus::new(PRIME_B).expect("prime"), cols),
            )
        };
        ModuleSpan {
            index,
            actions,
            inner,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.inner, SpanInner::Exact(_))
    }

    pub fn index(&self) -> &MonomialIndex {
        &self.index
    }

    /// Rank of the span; in modular mode an error if the primes disagree.
    pub fn rank(&self) -> Result<usize, IdentityError> {
        match &self.inner {
            SpanInner::Exact(e) => Ok(e.rank()),
            SpanInner::Modular(a, b) if a.rank() == b.rank() => Ok(a.rank()),
            SpanInner::Modular(a, b) => Err(IdentityError::PrimeDisagreement {
                a: a.rank(),
                b: b.rank(),
            }),
        }
    }

    /// Adds every permutation of `f`; returns the rank afterwards.
    pub fn add_orbit(&mut self, f: &MultilinearPoly) -> Result<usize, IdentityError> {
        let v = integer_vector(&self.index, f)?;
        self.add_orbit_vector(&v)
    }

    pub fn add_orbit_vector(&mut self, v: &[BigInt]) -> Result<usize, IdentityError> {
        for a in &self.actions {
            let row = act(v, a);
            match &mut self.inner {
                SpanInner::Exact(e) => {
                    e.insert(row);
                }
                SpanInner::Modular(ea, eb) => {
                    let (ma, mb) = (ea.modulus(), eb.modulus());
                    ea.insert(row.iter().map(|x| ma.from_bigint(x)).collect());
                    eb.insert(row.iter().map(|x| mb.from_bigint(x)).collect());
                }
            }
        }
        self.rank()
    }

    /// Whether `v` already lies in the span (modulo the first prime in
    /// modular mode).
    pub fn contains_vector(&self, v: &[BigInt]) -> bool {
        match &self.inner {
            SpanInner::Exact(e) => e.contains(v.to_vec()),
            SpanInner::Modular(ea, _) => {
                let m = ea.modulus();
                ea.contains(v.iter().map(|x| m.from_bigint(x)).collect())
            }
        }
    }
}

/// Coefficient vector of `f` scaled to a primitive integer vector.
pub(crate) fn integer_vector(
    index: &MonomialIndex,
    f: &MultilinearPoly,
) -> Result<Vec<BigInt>, IdentityError> {
    let v = index.vector(f);
    let den = v
        .iter()
        .fold(BigInt::from(1), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    Ok(v.iter()
        .map(|x| (x * BigRational::from_integer(den.clone())).to_integer())
        .collect())
}

/// Outcome of the search for identities not implied by lower ones.
#[derive(Clone, Debug)]
pub struct GeneratorSearch {
    pub weight: usize,
    /// Rank of the span of all permutations of all consequences (and of the
    /// same-weight identities supplied).
    pub consequence_rank: usize,
    /// Dimension of the space of all identities of this weight.
    pub kernel_rank: usize,
    /// Rank after adjoining the orbits of the new identities.
    pub final_rank: usize,
    pub new_identities: Vec<MultilinearPoly>,
    /// True when ranks were computed over Q; otherwise over two primes, with
    /// `final_rank == kernel_rank` still certifying the exact equality
    /// (modular rank is a lower bound for rational rank).
    pub exact: bool,
}

impl GeneratorSearch {
    pub fn new_module_dimension(&self) -> usize {
        self.kernel_rank - self.consequence_rank
    }
}

/// Kernel basis rows to scan: the LLL-reduced lattice for one operation,
/// the rational nullspace otherwise.
fn kernel_rows(w: usize, ops: &[OperationSymbol]) -> Result<(usize, Vec<Vec<BigInt>>), IdentityError> {
    if ops.len() == 1 {
        let r = kernel_pipeline(w, ops)?;
        let n = r.nullity;
        return Ok((n, r.reduced_basis.into_vectors()));
    }
    let x = expansion_matrix(w, ops)?;
    let mut e = IntEchelon::new(x.cols());
    for row in x.row_iter() {
        e.insert_rational(row);
    }
    let rows: Vec<Vec<BigInt>> = e
        .nullspace_rows()
        .iter()
        .map(|r| primitive_from_rational(r))
        .collect();
    debug_assert_eq!(rows.len(), x.cols() - rank(&x));
    Ok((rows.len(), rows))
}

/// Builds the span of all consequences of `lower` (identities of weight
/// w − 1 are composed with every operation; identities of weight w are used
/// as they are), then scans kernel rows in order and keeps those whose
/// orbit raises the rank, until the whole kernel is reached.
pub fn find_new_generators(
    w: usize,
    ops: &[OperationSymbol],
    lower: &[MultilinearPoly],
) -> Result<GeneratorSearch, IdentityError> {
    let mut gens = Vec::new();
    let mut same = Vec::new();
    for f in lower {
        if !verify_identity(f, ops)? {
            return Err(IdentityError::NotAnIdentity(f.display(ops)));
        }
        if f.weight() + 1 == w {
            gens.push(f.clone());
        } else if f.weight() == w {
            same.push(f.clone());
        } else {
            return Err(IdentityError::Unsupported(format!(
                "identity of weight {} supplied for weight {w}",
                f.weight()
            )));
        }
    }
    let mut span = ModuleSpan::new(w, ops.len());
    for c in consequence_set(&gens, w, ops.len())?.iter().chain(&same) {
        span.add_orbit(c)?;
    }
    let consequence_rank = span.rank()?;
    let (kernel_rank, rows) = kernel_rows(w, ops)?;
    let mut new_identities = Vec::new();
    let mut current = consequence_rank;
    for v in rows {
        if current >= kernel_rank {
            break;
        }
        if span.contains_vector(&v) {
            continue;
        }
        let r = span.add_orbit_vector(&v)?;
        if r > current {
            current = r;
            let q: Vec<BigRational> = v.into_iter().map(BigRational::from_integer).collect();
            new_identities.push(span.index().poly(&q));
        }
    }
    Ok(GeneratorSearch {
        weight: w,
        consequence_rank,
        kernel_rank,
        final_rank: current,
        new_identities,
        exact: span.is_exact(),
    })
}

/// Dimension of the module of new degree-5 identities for the weakly
/// anticommutative operation {x,y,z} = xyz + xzy − 2zyx.
pub fn wac_new_module_dimension() -> Result<usize, IdentityError> {
    let ops = [OperationSymbol::weakly_anticommutative()];
    let lower = [KnownIdentity::WacSymmetricSum.poly(&ops)?];
    let x = expansion_matrix(2, &ops)?;
    let nullity = x.cols() - rank(&x);
    Ok(nullity - consequence_rank(2, &ops, &lower, &[])?)
}

/// Rank of the S_n-module generated by `polys` (all of weight w).
pub fn module_rank(
    w: usize,
    ops: &[OperationSymbol],
    polys: &[MultilinearPoly],
) -> Result<usize, IdentityError> {
    let mut span = ModuleSpan::new(w, ops.len());
    for f in polys {
        span.add_orbit(f)?;
    }
    span.rank()
}

/// Rank of the consequences of `lower` (weight w − 1) at weight w,
/// together with the orbits of the same-weight `extra` polynomials.
pub fn consequence_rank(
    w: usize,
    ops: &[OperationSymbol],
    lower: &[MultilinearPoly],
    extra: &[MultilinearPoly],
) -> Result<usize, IdentityError> {
    let mut span = ModuleSpan::new(w, ops.len());
    for c in consequence_set(lower, w, ops.len())?.iter().chain(extra) {
        span.add_orbit(c)?;
    }
    span.rank()
}
