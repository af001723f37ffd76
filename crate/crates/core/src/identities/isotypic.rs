//! Identities of weight w one irreducible S_n-module at a time. A polynomial
//! is a tuple of group-algebra elements (one per association type); its
//! image under R_λ is a block row of d_λ × d_λ matrices, and the rank of the
//! stacked block rows of a module is its λ-multiplicity.

use std::fmt;

use num_bigint::BigInt;

use super::catalog::{mixed_weight2, single_operation_weight2};
use super::IdentityError;
use crate::linalg::{IntEchelon, ModEchelon, Modulus, PRIME_A, PRIME_B};
use crate::symmetric::{partitions, Irrep, IrrepTable, Partition, Permutation};
use crate::terms::{
    comtrans_ops, consequence_set, expand, MonomialIndex, MultilinearPoly, OperationSymbol,
    TreeMonomial,
};

/// One column of a multiplicity table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityRow {
    pub partition: Partition,
    /// Dimension of the irreducible representation.
    pub d: usize,
    /// Multiplicity in the module generated by the lower-weight identities.
    pub c: usize,
    /// Multiplicity in the module of all identities.
    pub a: usize,
    /// Multiplicity of the new identities, a − c.
    pub n: usize,
    /// Rank of the expansion block matrix E_λ.
    pub e: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub weight: usize,
    pub operations: Vec<String>,
    pub rows: Vec<MultiplicityRow>,
}

impl MultiplicityTable {
    pub fn row(&self, lambda: &Partition) -> Option<&MultiplicityRow> {
        self.rows.iter().find(|r| &r.partition == lambda)
    }

    /// Σ_λ a_λ d_λ: dimension of the space of identities of this weight.
    pub fn total_identities(&self) -> usize {
        self.rows.iter().map(|r| r.a * r.d).sum()
    }

    /// Σ_λ c_λ d_λ: dimension of the consequences of lower identities.
    pub fn total_consequences(&self) -> usize {
        self.rows.iter().map(|r| r.c * r.d).sum()
    }
}

impl fmt::Display for MultiplicityTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.rows.iter().map(|r| r.partition.to_string()).collect();
        let width = labels.iter().map(String::len).max().unwrap_or(1).max(3) + 1;
        write!(f, "{:<3}", "λ")?;
        for l in &labels {
            write!(f, "{l:>width$}")?;
        }
        writeln!(f)?;
        type Field = fn(&MultiplicityRow) -> usize;
        let fields: [(&str, Field); 4] = [
            ("d", |r| r.d),
            ("c", |r| r.c),
            ("a", |r| r.a),
            ("n", |r| r.n),
        ];
        for (name, get) in fields {
            write!(f, "{name:<3}")?;
            for r in &self.rows {
                write!(f, "{:>width$}", get(r))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// How ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    /// Modulo [`PRIME_A`] and [`PRIME_B`]; the two ranks must agree.
    DualPrime,
    /// Fraction-free integer elimination.
    Exact,
}

/// A polynomial split by association type: for each type touched, the
/// (leaf permutation rank, coefficient) terms of its group-algebra element.
#[derive(Clone, Debug)]
struct Components(Vec<(usize, Vec<(usize, i64)>)>);

fn components(index: &MonomialIndex, f: &MultilinearPoly) -> Result<Components, IdentityError> {
    let mut by_type: Vec<Vec<(usize, i64)>> = vec![Vec::new(); index.types().len()];
    for (m, c) in f.terms() {
        if !c.is_integer() {
            return Err(IdentityError::NonIntegerCoefficient);
        }
        let c = i64::try_from(c.to_integer()).map_err(|_| IdentityError::NonIntegerCoefficient)?;
        let t = index
            .type_index(&m.association_type())
            .ok_or_else(|| IdentityError::Unsupported("monomial outside the type list".into()))?;
        by_type[t].push((m.leaves().lex_rank(), c));
    }
    Ok(Components(
        by_type
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty())
            .collect(),
    ))
}

/// Σ c_p R_λ(p), row-major d × d.
fn block_image(table: &IrrepTable, terms: &[(usize, i64)]) -> Vec<i64> {
    let d = table.dim();
    let mut out = vec![0i64; d * d];
    for &(r, c) in terms {
        for (o, &x) in out.iter_mut().zip(table.by_rank(r)) {
            *o += c * x;
        }
    }
    out
}

/// Shared data for all partitions at one weight and operation list.
pub struct IsotypicSetup {
    weight: usize,
    ops: Vec<OperationSymbol>,
    index: MonomialIndex,
    consequences: Vec<Components>,
    /// Expansion of each association type with identity leaf order, as
    /// (word rank, coefficient) terms.
    xi: Vec<Vec<(usize, i64)>>,
}

impl IsotypicSetup {
    /// `lower` are identities of weight w − 1; their consequences are
    /// computed here.
    pub fn new(
        w: usize,
        ops: &[OperationSymbol],
        lower: &[MultilinearPoly],
    ) -> Result<Self, IdentityError> {
        let index = MonomialIndex::new(w, ops.len());
        let consequences = consequence_set(lower, w, ops.len())?
            .iter()
            .map(|k| components(&index, k))
            .collect::<Result<_, _>>()?;
        let id = Permutation::identity(index.degree());
        let xi = index
            .types()
            .iter()
            .map(|t| {
                let p = expand(&TreeMonomial::new(t, &id), ops)?;
                p.terms()
                    .map(|(word, c)| {
                        let c = i64::try_from(c.to_integer())
                            .map_err(|_| IdentityError::NonIntegerCoefficient)?;
                        Ok((word.as_permutation().lex_rank(), c))
                    })
                    .collect::<Result<Vec<_>, IdentityError>>()
            })
            .collect::<Result<_, _>>()?;
        Ok(IsotypicSetup {
            weight: w,
            ops: ops.to_vec(),
            index,
            consequences,
            xi,
        })
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn ops(&self) -> &[OperationSymbol] {
        &self.ops
    }

    pub fn type_count(&self) -> usize {
        self.index.types().len()
    }

    pub fn consequence_count(&self) -> usize {
        self.consequences.len()
    }

    pub fn index(&self) -> &MonomialIndex {
        &self.index
    }

    fn xi_images(&self, table: &IrrepTable) -> Vec<Vec<i64>> {
        self.xi.iter().map(|x| block_image(table, x)).collect()
    }

    /// E_λ: d rows, block t = R(ξ_t)ᵗ.
    fn expansion_rows(&self, xi: &[Vec<i64>], d: usize) -> Vec<Vec<i64>> {
        let cols = self.type_count() * d;
        (0..d)
            .map(|i| {
                let mut row = vec![0i64; cols];
                for (t, m) in xi.iter().enumerate() {
                    for j in 0..d {
                        row[t * d + j] = m[j * d + i];
                    }
                }
                row
            })
            .collect()
    }

    /// The d block rows of C_λ contributed by one consequence.
    fn consequence_rows(&self, k: &Components, table: &IrrepTable) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let d = table.dim();
        let cols = self.type_count() * d;
        let mut rows = vec![vec![0i64; cols]; d];
        let mut blocks = Vec::with_capacity(k.0.len());
        for (t, terms) in &k.0 {
            let b = block_image(table, terms);
            for i in 0..d {
                rows[i][t * d..(t + 1) * d].copy_from_slice(&b[i * d..(i + 1) * d]);
            }
            blocks.push(b);
        }
        (rows, blocks)
    }

    /// Exact check that a consequence lies in the kernel of E_λ:
    /// Σ_t R(K^t)·R(ξ_t) = 0.
    fn in_kernel(&self, k: &Components, blocks: &[Vec<i64>], xi: &[Vec<i64>], d: usize) -> bool {
        let mut acc = vec![0i128; d * d];
        for ((t, _), b) in k.0.iter().zip(blocks) {
            let x = &xi[*t];
            for i in 0..d {
                for l in 0..d {
                    let bil = b[i * d + l] as i128;
                    if bil == 0 {
                        continue;
                    }
                    for j in 0..d {
                        acc[i * d + j] += bil * x[l * d + j] as i128;
                    }
                }
            }
        }
        acc.iter().all(|&v| v == 0)
    }

    /// Multiplicities for one partition.
    pub fn row(&self, lambda: &Partition, mode: RankMode) -> Result<MultiplicityRow, IdentityError> {
        let irrep = Irrep::new(lambda);
        let table = IrrepTable::new(&irrep);
        let d = table.dim();
        let cols = self.type_count() * d;
        let xi = self.xi_images(&table);
        let e_rows = self.expansion_rows(&xi, d);
        let mut ranks = RankTrackers::new(mode, cols);
        for r in &e_rows {
            ranks.insert(r);
        }
        let e = ranks.rank()?;
        let a = cols - e;
        let mut ranks = RankTrackers::new(mode, cols);
        for k in &self.consequences {
            let (rows, blocks) = self.consequence_rows(k, &table);
            if !self.in_kernel(k, &blocks, &xi, d) {
                return Err(IdentityError::ContainmentFailed(lambda.to_string()));
            }
            for r in &rows {
                ranks.insert(r);
            }
        }
        let c = ranks.rank()?;
        Ok(MultiplicityRow {
            partition: lambda.clone(),
            d,
            c,
            a,
            n: a - c,
            e,
        })
    }

    /// The full table over all partitions of 2w + 1, computed on up to
    /// `threads` threads. The result does not depend on `threads`.
    pub fn table(&self, mode: RankMode, threads: usize) -> Result<MultiplicityTable, IdentityError> {
        let parts = partitions(self.index.degree());
        let rows = parallel_map(&parts, threads, |l| self.row(l, mode))
            .into_iter()
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiplicityTable {
            weight: self.weight,
            operations: self.ops.iter().map(|o| o.name().to_string()).collect(),
            rows,
        })
    }

    /// Basis of the kernel of E_λ modulo `m` (the row space N_λ).
    fn kernel_mod(&self, table: &IrrepTable, m: Modulus) -> Vec<Vec<u64>> {
        let d = table.dim();
        let xi = self.xi_images(table);
        let mut ech = ModEchelon::new(m, self.type_count() * d);
        for r in self.expansion_rows(&xi, d) {
            ech.insert(r.iter().map(|&x| m.from_i64(x)).collect());
        }
        ech.nullspace()
    }
}

/// Rank tracking in one of the two modes.
enum RankTrackers {
    Dual(ModEchelon, ModEchelon),
    Exact(IntEchelon),
}

impl RankTrackers {
    fn new(mode: RankMode, cols: usize) -> Self {
        match mode {
            RankMode::DualPrime => RankTrackers::Dual(
                ModEchelon::new(Modulus::new(PRIME_A).expect("prime"), cols),
                ModEchelon::new(Modulus::new(PRIME_B).expect("prime"), cols),
            ),
            RankMode::Exact => RankTrackers::Exact(IntEchelon::new(cols)),
        }
    }

    fn insert(&mut self, row: &[i64]) {
        match self {
            RankTrackers::Dual(a, b) => {
                let (ma, mb) = (a.modulus(), b.modulus());
                a.insert(row.iter().map(|&x| ma.from_i64(x)).collect());
                b.insert(row.iter().map(|&x| mb.from_i64(x)).collect());
            }
            RankTrackers::Exact(e) => {
                e.insert(row.iter().map(|&x| BigInt::from(x)).collect());
            }
        }
    }

    fn rank(&self) -> Result<usize, IdentityError> {
        match self {
            RankTrackers::Dual(a, b) if a.rank() == b.rank() => Ok(a.rank()),
            RankTrackers::Dual(a, b) => Err(IdentityError::PrimeDisagreement {
                a: a.rank(),
                b: b.rank(),
            }),
            RankTrackers::Exact(e) => Ok(e.rank()),
        }
    }
}

/// Maps `f` over `items` on up to `threads` scoped threads, preserving
/// order.
pub(crate) fn parallel_map<T: Sync, R: Send>(
    items: &[T],
    threads: usize,
    f: impl Fn(&T) -> R + Sync,
) -> Vec<R> {
    let threads = threads.clamp(1, items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results: Vec<std::sync::Mutex<Option<R>>> =
        items.iter().map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                *results[i].lock().expect("no poisoned results") = Some(r);
            });
        }
    });
    results
        .into_iter()
        .map(|m| m.into_inner().expect("no poisoned results").expect("every item mapped"))
        .collect()
}

/// Degree-7 table for one operation (commutator or translator), with the
/// weight-2 identities of that operation as lower identities.
pub fn degree7_table(
    op: &OperationSymbol,
    mode: RankMode,
    threads: usize,
) -> Result<MultiplicityTable, IdentityError> {
    let ops = [op.clone()];
    let lower = single_operation_weight2(&ops)?;
    IsotypicSetup::new(3, &ops, &lower)?.table(mode, threads)
}

/// Outcome of the two-operation degree-7 check for one partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedRow {
    pub partition: Partition,
    pub d: usize,
    /// Rank of CD_λ (modulo both primes; computation stops once it reaches a).
    pub c: usize,
    pub a: usize,
    pub e: usize,
    /// Row space of CD_λ equals N_λ modulo the first prime. Checked as: every
    /// row of the echelon form of CD_λ is annihilated by E_λ and the ranks
    /// agree, which is equivalent to equality of the two RCFs.
    pub rcf_equal: bool,
}

impl MixedRow {
    pub fn ok(&self) -> bool {
        self.c == self.a && self.rcf_equal
    }
}

/// Data for the two-operation degree-7 check.
pub struct MixedSetup {
    mixed: IsotypicSetup,
    singles: Vec<(IsotypicSetup, usize)>,
}

impl MixedSetup {
    pub fn new() -> Result<Self, IdentityError> {
        let ops = comtrans_ops();
        let lower = mixed_weight2(&ops)?;
        let mixed = IsotypicSetup::new(3, &ops, &lower)?;
        let mut singles = Vec::new();
        for (label, op) in ops.iter().enumerate() {
            let single = [op.clone()];
            let low = single_operation_weight2(&single)?;
            singles.push((IsotypicSetup::new(3, &single, &low)?, label));
        }
        Ok(MixedSetup { mixed, singles })
    }

    pub fn consequence_count(&self) -> usize {
        self.mixed.consequence_count()
    }

    /// Runs the check for one partition. With `include_single` false the
    /// embedded single-operation modules D¹_λ, D²_λ are left out.
    pub fn row(&self, lambda: &Partition, include_single: bool) -> Result<MixedRow, IdentityError> {
        let irrep = Irrep::new(lambda);
        let table = IrrepTable::new(&irrep);
        let d = table.dim();
        let cols = self.mixed.type_count() * d;
        let xi = self.mixed.xi_images(&table);
        let e_rows = self.mixed.expansion_rows(&xi, d);
        let ma = Modulus::new(PRIME_A).expect("prime");
        let mb = Modulus::new(PRIME_B).expect("prime");
        let mut ea = ModEchelon::new(ma, cols);
        let mut eb = ModEchelon::new(mb, cols);
        for r in &e_rows {
            ea.insert(r.iter().map(|&x| ma.from_i64(x)).collect());
            eb.insert(r.iter().map(|&x| mb.from_i64(x)).collect());
        }
        if ea.rank() != eb.rank() {
            return Err(IdentityError::PrimeDisagreement {
                a: ea.rank(),
                b: eb.rank(),
            });
        }
        let e = ea.rank();
        let a = cols - e;
        let e_mod: [Vec<Vec<u64>>; 2] = [ma, mb].map(|m| {
            e_rows
                .iter()
                .map(|r| r.iter().map(|&x| m.from_i64(x)).collect())
                .collect()
        });

        let mut span = [ModEchelon::new(ma, cols), ModEchelon::new(mb, cols)];
        let mut contained = true;
        if include_single {
            for (single, label) in &self.singles {
                let embed: Vec<usize> = single
                    .index()
                    .types()
                    .iter()
                    .map(|t| {
                        self.mixed
                            .index()
                            .type_index(&t.relabel_all(*label))
                            .expect("relabeled type exists")
                    })
                    .collect();
                for (k, m) in [ma, mb].into_iter().enumerate() {
                    for v in single.kernel_mod(&table, m) {
                        let mut row = vec![0u64; cols];
                        for (s, &t) in embed.iter().enumerate() {
                            row[t * d..(t + 1) * d].copy_from_slice(&v[s * d..(s + 1) * d]);
                        }
                        contained &= annihilated(&e_mod[k], &row, m);
                        if span[k].rank() < a {
                            span[k].insert(row);
                        }
                    }
                }
            }
        }
        for k in &self.mixed.consequences {
            if span[0].rank() >= a && span[1].rank() >= a {
                break;
            }
            let (rows, blocks) = self.mixed.consequence_rows(k, &table);
            if !self.mixed.in_kernel(k, &blocks, &xi, d) {
                return Err(IdentityError::ContainmentFailed(lambda.to_string()));
            }
            for r in &rows {
                for (sp, m) in span.iter_mut().zip([ma, mb]) {
                    if sp.rank() < a {
                        sp.insert(r.iter().map(|&x| m.from_i64(x)).collect());
                    }
                }
            }
        }
        let (ra, rb) = (span[0].rank(), span[1].rank());
        if ra != rb {
            return Err(IdentityError::PrimeDisagreement { a: ra, b: rb });
        }
        let rcf_equal = contained
            && ra == a
            && span[0]
                .rows()
                .iter()
                .all(|r| annihilated(&e_mod[0], &r.iter().map(|&x| x as u64).collect::<Vec<_>>(), ma));
        Ok(MixedRow {
            partition: lambda.clone(),
            d,
            c: ra,
            a,
            e,
            rcf_equal,
        })
    }

    pub fn run(
        &self,
        lambdas: &[Partition],
        threads: usize,
    ) -> Result<Vec<MixedRow>, IdentityError> {
        parallel_map(lambdas, threads, |l| self.row(l, true))
            .into_iter()
            .collect()
    }
}

/// E·vᵀ = 0 modulo m.
fn annihilated(e: &[Vec<u64>], v: &[u64], m: Modulus) -> bool {
    e.iter().all(|r| {
        r.iter()
            .zip(v)
            .fold(0u64, |acc, (&x, &y)| m.add(acc, m.mul(x, y)))
            == 0
    })
}

/// The two-operation degree-7 check for the given partitions (all
/// partitions of 7 when `lambdas` is empty).
pub fn degree7_mixed_check(
    lambdas: &[Partition],
    threads: usize,
) -> Result<Vec<MixedRow>, IdentityError> {
    let setup = MixedSetup::new()?;
    if lambdas.is_empty() {
        setup.run(&partitions(7), threads)
    } else {
        setup.run(lambdas, threads)
    }
}
