use std::path::PathBuf;

use comtrans::envelope::{
    self, check_commutator_table, compositions, distinct_composition_forms, envelope_generators,
    groebner_completion, verify_translator_formulas, EnvelopeError, EnvelopeKind, FiniteAlgebra,
    ProductCheck, DEFAULT_DEGREE_CAP,
};
use comtrans::identities::{
    comtrans_relations, consequence_rank, degree7_mixed_check, degree7_table, find_new_generators,
    kernel_pipeline, minimal_module_generators, single_operation_pair, single_operation_weight2,
    verify_identity, wac_new_module_dimension, IdentityError, IsotypicSetup, KnownIdentity,
    MultiplicityRow, MultiplicityTable, RankMode,
};
use comtrans::linalg::{rcf, ExactMatrix};
use comtrans::rewrite::{
    comtrans_groebner, conjecture_value, count_normal_forms, relation_matrix, ColumnOrder, CountMethod,
    RewriteError, RewriteSystem,
};
use comtrans::symmetric::Partition;
use comtrans::terms::{comtrans_ops, MultilinearPoly, OperationSymbol};
use serde_json::{json, Value};

use crate::report::{IdentityEntry, RunReport, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    CapExceeded(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Resource(_) => 2,
            CliError::CapExceeded(_) => 3,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl From<RewriteError> for CliError {
    fn from(e: RewriteError) -> Self {
        match e {
            RewriteError::TooLarge(_) => CliError::Resource(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<EnvelopeError> for CliError {
    fn from(e: EnvelopeError) -> Self {
        match e {
            EnvelopeError::DegreeCap { .. } => CliError::CapExceeded(e.to_string()),
            EnvelopeError::Parse(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn matrix_table(name: &str, m: &ExactMatrix) -> Table {
    let cols: Vec<String> = (0..m.cols()).map(|j| j.to_string()).collect();
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut t = Table::new(name, &col_refs);
    for r in m.row_iter() {
        t.push(r.iter().map(|x| json!(x.to_string())).collect());
    }
    t.text = Some(m.to_string());
    t
}

pub fn ct_groebner(dump_matrix: bool, order: ColumnOrder) -> Result<RunReport> {
    let mut report = RunReport::new("ct-groebner");
    report.param("column_order", format!("{order:?}"));
    let rules = comtrans_groebner()?;
    let mut t = Table::new("rules", &["lhs", "rhs"]);
    for r in &rules {
        let s = r.to_string();
        let (lhs, rhs) = s.split_once(" -> ").expect("rule display has an arrow");
        t.push(vec![json!(lhs), json!(rhs)]);
    }
    report.tables.push(t);
    let sys = RewriteSystem::comtrans()?;
    let mut t = Table::new("irreducible_patterns", &["pattern"]);
    for p in sys.irreducible_patterns() {
        t.push(vec![json!(p.to_string())]);
    }
    report.tables.push(t);
    if dump_matrix {
        let m = relation_matrix(order)?;
        let (r, rank) = rcf(&m);
        let nonzero: Vec<usize> = (0..rank).collect();
        report.tables.push(matrix_table("relation_matrix", &m));
        report.tables.push(matrix_table("rcf", &r.select_rows(&nonzero)));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodArg {
    Enumerate,
    Structural,
}

pub fn ct_dim(w: usize, method: Option<MethodArg>) -> Result<RunReport> {
    let method = match method {
        Some(MethodArg::Enumerate) => CountMethod::Enumerate,
        Some(MethodArg::Structural) => CountMethod::Structural,
        None if w <= 2 => CountMethod::Enumerate,
        None => CountMethod::Structural,
    };
    let mut report = RunReport::new("ct-dim");
    report.param("weight", w);
    report.param("method", format!("{method:?}").to_lowercase());
    let count = count_normal_forms(w, method)?;
    let conj = conjecture_value(w);
    let mut t = Table::new("dimension", &["weight", "normal_forms", "conjecture", "agree"]);
    t.push(vec![json!(w), json!(count.to_string()), json!(conj.to_string()), json!(count == conj)]);
    report.tables.push(t);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OpsArg {
    Com,
    Tra,
    Both,
    Wac,
    Qdef2,
}

impl OpsArg {
    fn operations(self) -> Vec<OperationSymbol> {
        match self {
            OpsArg::Com => vec![OperationSymbol::commutator()],
            OpsArg::Tra => vec![OperationSymbol::translator()],
            OpsArg::Both => comtrans_ops(),
            OpsArg::Wac => vec![OperationSymbol::weakly_anticommutative()],
            OpsArg::Qdef2 => vec![OperationSymbol::anti_jordan_q2()],
        }
    }
}

fn entry(name: &str, f: &MultilinearPoly, ops: &[OperationSymbol]) -> Result<IdentityEntry> {
    Ok(IdentityEntry {
        name: name.into(),
        text: f.display(ops),
        verified: verify_identity(f, ops)?,
    })
}

fn known(k: KnownIdentity, ops: &[OperationSymbol]) -> Result<IdentityEntry> {
    entry(k.name(), &k.poly(ops)?, ops)
}

/// Module generators of all degree-3 identities.
fn degree3_generators(ops: &[OperationSymbol]) -> Result<Vec<MultilinearPoly>> {
    let k = kernel_pipeline(1, ops)?;
    Ok(minimal_module_generators(&k).into_iter().map(|i| k.identity(i)).collect())
}

pub fn identities(degree: usize, tag: OpsArg) -> Result<RunReport> {
    let ops = tag.operations();
    let mut report = RunReport::new("identities");
    report.param("degree", degree);
    report.param("ops", format!("{tag:?}").to_lowercase());
    match degree {
        3 => {
            let k = kernel_pipeline(1, &ops)?;
            report.param("arithmetic", "exact");
            let mut t = Table::new("kernel", &["expansion_rank", "nullity", "squared_lengths"]);
            let lengths: Vec<String> = k.lengths.iter().map(|l| l.to_string()).collect();
            t.push(vec![json!(k.expansion_rank), json!(k.nullity), json!(lengths.join(" "))]);
            report.tables.push(t);
            for (n, i) in minimal_module_generators(&k).into_iter().enumerate() {
                report.identities.push(entry(&format!("generator {}", n + 1), &k.identity(i), &ops)?);
            }
        }
        5 => identities_degree5(tag, &ops, &mut report)?,
        _ => return Err(CliError::Usage(format!("degree must be 3 or 5, got {degree}"))),
    }
    Ok(report)
}

fn identities_degree5(tag: OpsArg, ops: &[OperationSymbol], report: &mut RunReport) -> Result<()> {
    if tag == OpsArg::Wac {
        report.param("arithmetic", "exact");
        let mut t = Table::new("new_module", &["dimension"]);
        t.push(vec![json!(wac_new_module_dimension()?)]);
        report.tables.push(t);
        report.identities.push(known(KnownIdentity::WacSymmetricSum, ops)?);
        report.identities.push(known(KnownIdentity::WacDerivation, ops)?);
        return Ok(());
    }
    let (lower, known_ids): (Vec<MultilinearPoly>, Vec<KnownIdentity>) = match tag {
        OpsArg::Com | OpsArg::Tra => {
            let (low, high) = single_operation_pair(ops)?;
            (vec![low.poly(ops)?], vec![high])
        }
        OpsArg::Both => {
            let mut lower = comtrans_relations(ops)?;
            lower.push(KnownIdentity::CommutatorDegree5.poly(ops)?);
            lower.push(KnownIdentity::TranslatorDegree5.poly(ops)?);
            (lower, vec![KnownIdentity::MixedA, KnownIdentity::MixedB, KnownIdentity::MixedC])
        }
        OpsArg::Qdef2 => (degree3_generators(ops)?, Vec::new()),
        OpsArg::Wac => unreachable!("handled above"),
    };
    let search = find_new_generators(2, ops, &lower)?;
    report.param("arithmetic", if search.exact { "exact" } else { "modular (two primes)" });
    let mut t = Table::new(
        "ranks",
        &["consequence_rank", "kernel_rank", "new_module_dimension", "final_rank"],
    );
    t.push(vec![
        json!(search.consequence_rank),
        json!(search.kernel_rank),
        json!(search.new_module_dimension()),
        json!(search.final_rank),
    ]);
    report.tables.push(t);
    for (n, f) in search.new_identities.iter().enumerate() {
        report.identities.push(entry(&format!("new {}", n + 1), f, ops)?);
    }
    if !known_ids.is_empty() {
        let low: Vec<MultilinearPoly> = lower.iter().filter(|f| f.weight() == 1).cloned().collect();
        let same: Vec<MultilinearPoly> = lower
            .iter()
            .filter(|f| f.weight() == 2)
            .chain(&search.new_identities)
            .cloned()
            .collect();
        let base = consequence_rank(2, ops, &low, &same)?;
        let mut t = Table::new("known_identities_in_span", &["identity", "in_span"]);
        for k in known_ids {
            let mut with = same.clone();
            with.push(k.poly(ops)?);
            let in_span = consequence_rank(2, ops, &low, &with)? == base;
            t.push(vec![json!(k.name()), json!(in_span)]);
            report.identities.push(known(k, ops)?);
        }
        report.tables.push(t);
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Degree7Ops {
    Com,
    Tra,
    Mixed,
}

fn multiplicity_table(table: &MultiplicityTable) -> Table {
    let mut t = Table::new("multiplicities", &["partition", "d", "c", "a", "n"]);
    for r in &table.rows {
        t.push(row_cells(r));
    }
    t.text = Some(table.to_string());
    t
}

fn row_cells(r: &MultiplicityRow) -> Vec<Value> {
    vec![json!(r.partition.to_string()), json!(r.d), json!(r.c), json!(r.a), json!(r.n)]
}

pub fn degree7(tag: Degree7Ops, partition: Option<&str>, exact: bool, threads: usize) -> Result<RunReport> {
    let lambda = partition
        .map(|p| {
            p.parse::<Partition>()
                .ok()
                .filter(|l| l.weight() == 7)
                .ok_or_else(|| CliError::Usage(format!("not a partition of 7: {p:?}")))
        })
        .transpose()?;
    let mode = if exact { RankMode::Exact } else { RankMode::DualPrime };
    let mut report = RunReport::new("degree7");
    report.param("ops", format!("{tag:?}").to_lowercase());
    if let Some(l) = &lambda {
        report.param("partition", l.to_string());
    }
    let op = match tag {
        Degree7Ops::Com => OperationSymbol::commutator(),
        Degree7Ops::Tra => OperationSymbol::translator(),
        Degree7Ops::Mixed => {
            if exact {
                return Err(CliError::Usage("--exact is not available for the mixed check".into()));
            }
            report.param("arithmetic", "modular (two primes; row spaces compared modulo one prime)");
            let lambdas: Vec<Partition> = lambda.into_iter().collect();
            let rows = degree7_mixed_check(&lambdas, threads)?;
            let mut t = Table::new("mixed", &["partition", "d", "c", "a", "rcf_equal", "ok"]);
            for r in &rows {
                t.push(vec![
                    json!(r.partition.to_string()),
                    json!(r.d),
                    json!(r.c),
                    json!(r.a),
                    json!(r.rcf_equal),
                    json!(r.ok()),
                ]);
            }
            report.tables.push(t);
            return Ok(report);
        }
    };
    report.param("arithmetic", if exact { "exact" } else { "modular (two primes)" });
    let table = match lambda {
        Some(l) => {
            let ops = [op.clone()];
            let lower = single_operation_weight2(&ops)?;
            let row = IsotypicSetup::new(3, &ops, &lower)?.row(&l, mode)?;
            MultiplicityTable {
                weight: 3,
                operations: vec![op.name().to_string()],
                rows: vec![row],
            }
        }
        None => degree7_table(&op, mode, threads)?,
    };
    report.tables.push(multiplicity_table(&table));
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum KindArg {
    #[value(name = "C")]
    C,
    #[value(name = "T")]
    T,
    #[value(name = "CT")]
    Ct,
}

impl KindArg {
    fn kind(self) -> EnvelopeKind {
        match self {
            KindArg::C => EnvelopeKind::Commutator,
            KindArg::T => EnvelopeKind::Translator,
            KindArg::Ct => EnvelopeKind::Comtrans,
        }
    }
}

fn poly_table(name: &str, polys: &[envelope::NCPoly]) -> Table {
    let mut t = Table::new(name, &["polynomial"]);
    for p in polys {
        t.push(vec![json!(p.to_string())]);
    }
    t
}

fn check_table(name: &str, checks: &[ProductCheck]) -> Table {
    let mut t = Table::new(name, &["source", "printed", "computed"]);
    for c in checks {
        t.push(vec![json!(c.source), json!(c.claim), json!(c.computed.to_string())]);
    }
    t
}

pub fn envelope(
    kind_arg: KindArg,
    max_degree: usize,
    load: Option<PathBuf>,
    save: Option<PathBuf>,
) -> Result<RunReport> {
    let kind = kind_arg.kind();
    let mut report = RunReport::new("envelope");
    report.param("kind", format!("{kind_arg:?}").to_uppercase());
    report.param("max_degree", max_degree);
    report.param("degree_cap", DEFAULT_DEGREE_CAP);
    report.param("arithmetic", "exact");
    let gens = match &load {
        Some(path) => {
            report.param("loaded", path.display().to_string());
            envelope::load_polynomials(path)?
        }
        None => envelope_generators(kind),
    };
    let comps = compositions(&gens);
    let mut t = Table::new("generators", &["generators", "compositions", "distinct_nonzero_normal_forms"]);
    t.push(vec![
        json!(gens.len()),
        json!(comps.len()),
        json!(distinct_composition_forms(&comps).len()),
    ]);
    report.tables.push(t);

    let gb = groebner_completion(&gens, DEFAULT_DEGREE_CAP)?;
    if let Some(path) = &save {
        envelope::save_polynomials(path, &gb.polynomials)?;
    }
    let mut t = Table::new("completion_rounds", &["generators", "compositions", "new_polynomials"]);
    for r in &gb.rounds {
        t.push(vec![json!(r.generators), json!(r.compositions), json!(r.new_polynomials)]);
    }
    report.tables.push(t);
    report.tables.push(poly_table("groebner_basis", &gb.polynomials));

    let (words, finite) = gb.normal_words(max_degree);
    let mut t = Table::new("normal_words", &["degree", "count", "words"]);
    for d in 0..=max_degree {
        let ws: Vec<String> = words.iter().filter(|w| w.len() == d).map(|w| w.to_string()).collect();
        if ws.is_empty() {
            break;
        }
        t.push(vec![json!(d), json!(ws.len()), json!(ws.join(" "))]);
    }
    report.tables.push(t);
    report.param("finite", finite);

    if finite {
        let alg = FiniteAlgebra::from_groebner(&gb, max_degree)?;
        let mut t = Table::new("structure_constants", &["left", "right", "product"]);
        for (u, v, p) in alg.nonzero_products() {
            t.push(vec![json!(u.to_string()), json!(v.to_string()), json!(p.to_string())]);
        }
        report.tables.push(t);
        let w = alg.wedderburn();
        report.tables.push(poly_table("center", &w.center));
        let mut t = Table::new("wedderburn", &["idempotent", "ideal_dimension"]);
        for (e, d) in w.idempotents.iter().zip(&w.ideal_dims) {
            t.push(vec![json!(e.to_string()), json!(d)]);
        }
        report.tables.push(t);
        report.param("dimension", w.dimension);
        report.param("radical_dimension", w.radical_dim);
        report.param("split_over_rationals", w.split_over_rationals);
    }
    let checks = match kind {
        EnvelopeKind::Translator => verify_translator_formulas(&gb, 12),
        _ => check_commutator_table(&gb),
    };
    let bad: Vec<ProductCheck> = checks.into_iter().filter(|c| !c.matches()).collect();
    report.tables.push(check_table("printed_table_discrepancies", &bad));
    Ok(report)
}
