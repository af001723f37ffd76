mod common;

use comtrans::identities::*;
use comtrans::linalg::LatticeBasis;
use comtrans::symmetric::{partitions, Partition, Permutation};
use comtrans::terms::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use common::printed::*;

fn int_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

fn orbit_vectors(index: &MonomialIndex, f: &MultilinearPoly) -> Vec<Vec<BigInt>> {
    Permutation::all(f.degree())
        .iter()
        .map(|p| {
            index
                .vector(&f.apply_permutation(p))
                .into_iter()
                .map(|x| x.to_integer())
                .collect()
        })
        .collect()
}

/// The printed degree-3 matrices index columns as [xyz]..[zyx] then
/// <xyz>..<zyx>, which is the column order of the two-operation index.
fn printed(rows: &[[i64; 12]; 7]) -> LatticeBasis {
    let r: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
    LatticeBasis::new(12, int_rows(&r)).unwrap()
}

#[test]
fn degree3_kernel_matches_relations() {
    let ops = comtrans_ops();
    let report = kernel_pipeline(1, &ops).unwrap();
    assert_eq!(report.expansion_rank, 5);
    assert_eq!(report.nullity, 7);
    assert!(report.lengths.iter().all(|l| *l <= BigInt::from(5)));

    let index = MonomialIndex::new(1, 2);
    let mut gens = Vec::new();
    for f in comtrans_relations(&ops).unwrap() {
        gens.extend(orbit_vectors(&index, &f));
    }
    let relations = LatticeBasis::from_generators(12, &gens).unwrap();
    assert!(relations.same_lattice(&report.reduced_basis));
    assert!(printed(&PRINTED_N1).same_lattice(&report.reduced_basis));
    assert!(printed(&PRINTED_N2).same_lattice(&report.reduced_basis));

    let product = |b: &LatticeBasis| b.squared_lengths().iter().product::<BigInt>();
    assert_eq!(product(&printed(&PRINTED_N1)), BigInt::from(6272));
    assert_eq!(product(&printed(&PRINTED_N2)), BigInt::from(1920));
}

#[test]
fn degree3_module_generators() {
    let ops = comtrans_ops();
    let report = kernel_pipeline(1, &ops).unwrap();
    let kept = minimal_module_generators(&report);
    assert_eq!(kept.len(), 3);
    let gens: Vec<MultilinearPoly> = kept.iter().map(|&i| report.identity(i)).collect();
    for g in &gens {
        assert!(verify_identity(g, &ops).unwrap());
    }
    let relations = comtrans_relations(&ops).unwrap();
    let both: Vec<MultilinearPoly> = gens.iter().chain(&relations).cloned().collect();
    assert_eq!(module_rank(1, &ops, &gens).unwrap(), 7);
    assert_eq!(module_rank(1, &ops, &relations).unwrap(), 7);
    assert_eq!(module_rank(1, &ops, &both).unwrap(), 7);
}

#[test]
fn single_row_lattice_is_its_own_generator() {
    let ops = [OperationSymbol::commutator()];
    let mut report = kernel_pipeline(1, &ops).unwrap();
    let first = report.reduced_basis.vectors()[0].clone();
    report.reduced_basis = LatticeBasis::new(6, vec![first]).unwrap();
    report.nullity = 1;
    assert_eq!(minimal_module_generators(&report), vec![0]);
}

#[test]
fn associative_operation_has_no_identities() {
    let report = kernel_pipeline(1, &[OperationSymbol::associative()]).unwrap();
    assert_eq!(report.nullity, 0);
    assert_eq!(report.expansion_rank, 6);
}

#[test]
fn verify_identity_examples() {
    let com = [OperationSymbol::commutator()];
    assert!(verify_identity(&KnownIdentity::CommutatorSkew.poly(&com).unwrap(), &com).unwrap());
    assert!(!verify_identity(&parse_poly("[x,y,z]", &com).unwrap(), &com).unwrap());
    assert!(verify_identity(&KnownIdentity::CommutatorDegree5.poly(&com).unwrap(), &com).unwrap());
    let wac = [OperationSymbol::weakly_anticommutative()];
    assert!(verify_identity(&KnownIdentity::WacSymmetricSum.poly(&wac).unwrap(), &wac).unwrap());
    assert!(verify_identity(&KnownIdentity::WacDerivation.poly(&wac).unwrap(), &wac).unwrap());
    let ops = comtrans_ops();
    for k in [
        KnownIdentity::Comtrans,
        KnownIdentity::TranslatorDegree5,
        KnownIdentity::MixedA,
        KnownIdentity::MixedB,
        KnownIdentity::MixedC,
    ] {
        assert!(verify_identity(&k.poly(&ops).unwrap(), &ops).unwrap(), "{}", k.name());
    }
}

#[test]
fn degree5_commutator() {
    let com = [OperationSymbol::commutator()];
    let report = kernel_pipeline(2, &com).unwrap();
    assert_eq!(report.expansion_rank, 70);
    assert_eq!(report.nullity, 290);
    assert_eq!(report.lengths.last(), Some(&BigInt::from(6)));

    let lower = [KnownIdentity::CommutatorSkew.poly(&com).unwrap()];
    let search = find_new_generators(2, &com, &lower).unwrap();
    assert!(search.exact);
    assert_eq!(search.consequence_rank, 270);
    assert_eq!(search.kernel_rank, 290);
    assert_eq!(search.new_module_dimension(), 20);
    assert_eq!(search.final_rank, 290);
    assert_eq!(search.new_identities.len(), 1);
    assert!(verify_identity(&search.new_identities[0], &com).unwrap());

    // The found generator and the known degree-5 commutator identity
    // generate the same module over the consequences.
    let com5 = KnownIdentity::CommutatorDegree5.poly(&com).unwrap();
    assert_eq!(consequence_rank(2, &com, &lower, &[com5]).unwrap(), 290);
}

#[test]
fn degree5_translator() {
    let tra = [OperationSymbol::translator()];
    let lower = [KnownIdentity::TranslatorCyclic.poly(&tra).unwrap()];
    let search = find_new_generators(2, &tra, &lower).unwrap();
    assert_eq!(search.kernel_rank, 272);
    assert_eq!(search.consequence_rank, 200);
    assert_eq!(search.final_rank, 272);
    let tra5 = KnownIdentity::TranslatorDegree5.poly(&tra).unwrap();
    assert!(verify_identity(&tra5, &tra).unwrap());
    assert_eq!(consequence_rank(2, &tra, &lower, &[tra5]).unwrap(), 272);
}

#[test]
fn degree5_mixed() {
    let ops = comtrans_ops();
    let x = expansion_matrix(2, &ops).unwrap();
    assert_eq!((x.rows(), x.cols()), (120, 1440));
    let relations = comtrans_relations(&ops).unwrap();
    assert_eq!(consequence_set(&relations, 2, 2).unwrap().len(), 36);
    let gens = mixed_degree5_generators(&ops).unwrap();
    for g in &gens {
        assert!(verify_identity(g, &ops).unwrap());
    }
    let mut lower = relations.clone();
    lower.extend(gens);
    let search = find_new_generators(2, &ops, &lower).unwrap();
    assert_eq!(search.kernel_rank, 1331);
    assert_eq!(search.consequence_rank, 1331);
    assert!(search.new_identities.is_empty());
    assert_eq!(consequence_rank(2, &ops, &relations, &[]).unwrap(), 1190);
}

#[test]
fn weakly_anticommutative() {
    assert_eq!(wac_new_module_dimension().unwrap(), 141);
    let wac = [OperationSymbol::weakly_anticommutative()];
    let sym = KnownIdentity::WacSymmetricSum.poly(&wac).unwrap();
    let der = KnownIdentity::WacDerivation.poly(&wac).unwrap();
    assert!(verify_identity(&der, &wac).unwrap());
    assert!(module_rank(2, &wac, &[der.clone()]).unwrap() < 141);
    let x = expansion_matrix(2, &wac).unwrap();
    let kernel = x.cols() - comtrans::linalg::rank(&x);
    assert!(consequence_rank(2, &wac, &[sym], &[der]).unwrap() < kernel);
}

#[test]
fn degree5_isotypic_matches_flat_ranks() {
    let com = [OperationSymbol::commutator()];
    let lower = [KnownIdentity::CommutatorSkew.poly(&com).unwrap()];
    let setup = IsotypicSetup::new(2, &com, &lower).unwrap();
    let table = setup.table(RankMode::Exact, 1).unwrap();
    assert_eq!(table.total_identities(), 290);
    assert_eq!(table.total_consequences(), 270);
    let modular = setup.table(RankMode::DualPrime, 2).unwrap();
    assert_eq!(table, modular);
}

fn check_table(table: &MultiplicityTable, expected: &[[usize; 15]; 4]) {
    assert_eq!(table.rows.len(), 15);
    for (i, r) in table.rows.iter().enumerate() {
        assert_eq!(
            [r.d, r.c, r.a, r.n],
            [expected[0][i], expected[1][i], expected[2][i], expected[3][i]],
            "partition {}",
            r.partition
        );
    }
}

#[test]
fn degree7_commutator_table() {
    let t = degree7_table(&OperationSymbol::commutator(), RankMode::DualPrime, 1).unwrap();
    check_table(&t, &FIG2);
}

#[test]
fn degree7_translator_table() {
    let t = degree7_table(&OperationSymbol::translator(), RankMode::DualPrime, 1).unwrap();
    check_table(&t, &FIG3);
}

#[test]
fn degree7_exact_spot_check() {
    let lambda: Partition = "43".parse().unwrap();
    for op in [OperationSymbol::commutator(), OperationSymbol::translator()] {
        let ops = [op];
        let setup = IsotypicSetup::new(3, &ops, &single_operation_weight2(&ops).unwrap()).unwrap();
        let exact = setup.row(&lambda, RankMode::Exact).unwrap();
        let modular = setup.row(&lambda, RankMode::DualPrime).unwrap();
        assert_eq!(exact, modular);
        assert_eq!(exact.n, 1);
    }
}

#[test]
fn degree7_mixed_small_partitions() {
    let setup = MixedSetup::new().unwrap();
    assert_eq!(setup.consequence_count(), 656);
    for l in ["7", "61", "1^7"] {
        let row = setup.row(&l.parse().unwrap(), true).unwrap();
        assert!(row.ok(), "{row:?}");
        assert!(row.e <= row.d);
    }
    // The degree-5 two-operation identities already imply the new
    // single-operation identities of degree 7.
    let row = setup.row(&"43".parse().unwrap(), false).unwrap();
    assert_eq!((row.c, row.a), (1330, 1330));
}

#[test]
fn tables_are_deterministic() {
    let com = [OperationSymbol::commutator()];
    let lower = [KnownIdentity::CommutatorSkew.poly(&com).unwrap()];
    let setup = IsotypicSetup::new(2, &com, &lower).unwrap();
    let a = setup.table(RankMode::DualPrime, 1).unwrap();
    let b = setup.table(RankMode::DualPrime, 3).unwrap();
    assert_eq!(a, b);
    assert!(a.rows.iter().all(|r| r.c <= r.a));
    assert_eq!(a.rows.len(), partitions(5).len());
}

#[test]
fn report_identity_round_trip() {
    let ops = comtrans_ops();
    let report = kernel_pipeline(1, &ops).unwrap();
    let f = report.identity(0);
    let v: Vec<BigRational> = report.index().vector(&f);
    assert_eq!(
        v.iter().map(|x| x.to_integer()).collect::<Vec<_>>(),
        report.reduced_basis.vectors()[0]
    );
}
