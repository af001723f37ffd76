//! Randomized property checks shared by the property suite and the
//! acceptance runner. Every runner uses a fixed seed.

#![allow(dead_code)]

pub mod printed;

use std::sync::OnceLock;

use comtrans::envelope::{compositions, envelope_basis, EnvelopeKind, GroebnerBasis, NCPoly, NCWord};
use comtrans::linalg::{default_delta, is_lll_reduced, lll_reduce, rcf, row_space_contained, ExactMatrix, LatticeBasis};
use comtrans::rewrite::{RewriteSystem, Strategy as RewriteStrategy};
use comtrans::symmetric::{partitions, Irrep, Permutation};
use comtrans::terms::MonomialIndex;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    )
}

fn irreps7() -> &'static [Irrep] {
    static IRREPS: OnceLock<Vec<Irrep>> = OnceLock::new();
    IRREPS.get_or_init(|| partitions(7).iter().map(Irrep::new).collect())
}

fn mat_mul(a: &[i64], b: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x != 0 {
                for j in 0..d {
                    out[i * d + j] += x * b[k * d + j];
                }
            }
        }
    }
    out
}

/// R_λ(pq) = R_λ(p)R_λ(q) for random pairs in S_7 and all 15 partitions.
pub fn irrep_homomorphism(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(0usize..5040, 0usize..5040), |(a, b)| {
            let p = Permutation::from_lex_rank(7, a);
            let q = Permutation::from_lex_rank(7, b);
            for irrep in irreps7() {
                let d = irrep.dim();
                let lhs = irrep.matrix(&p.compose(&q));
                let rhs = mat_mul(&irrep.matrix(&p), &irrep.matrix(&q), d);
                prop_assert_eq!(lhs, rhs, "partition {}", irrep.partition());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn small_matrix() -> impl proptest::strategy::Strategy<Value = ExactMatrix> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r).prop_map(move |rows| {
            ExactMatrix::from_i64_rows(c, &rows).expect("rectangular")
        })
    })
}

/// rcf(rcf(m)) = rcf(m), and rcf(m) spans the row space of m.
pub fn rcf_properties(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&small_matrix(), |m| {
            let (r, rank) = rcf(&m);
            let (rr, rank2) = rcf(&r);
            prop_assert_eq!(&rr, &r);
            prop_assert_eq!(rank, rank2);
            prop_assert!(row_space_contained(&m, &r));
            prop_assert!(row_space_contained(&r, &m));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn small_lattice() -> impl proptest::strategy::Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5)
        .prop_flat_map(|k| (Just(k), k..=8))
        .prop_flat_map(|(k, n)| proptest::collection::vec(proptest::collection::vec(-20i64..=20, n), k))
}

/// LLL output generates the same lattice and is reduced.
pub fn lll_properties(cases: u32) -> Result<(), String> {
    let delta = default_delta();
    runner(cases)
        .run(&small_lattice(), |rows| {
            let n = rows[0].len();
            let vecs: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let Ok(b) = LatticeBasis::new(n, vecs) else {
                return Err(TestCaseError::reject("dependent rows"));
            };
            let reduced = lll_reduce(&b, &delta).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(reduced.len(), b.len());
            prop_assert!(reduced.same_lattice(&b));
            prop_assert!(is_lll_reduced(&reduced, &delta));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Innermost and outermost normal forms agree on every monomial of weight
/// at most 2, and the results are irreducible.
pub fn rewrite_confluence() -> Result<usize, String> {
    let sys = RewriteSystem::comtrans().map_err(|e| e.to_string())?;
    let mut checked = 0;
    for w in 0..=2 {
        let index = MonomialIndex::new(w, 2);
        for col in 0..index.len() {
            let m = index.monomial(col);
            let a = sys.normal_form(&m, RewriteStrategy::Innermost);
            let b = sys.normal_form(&m, RewriteStrategy::Outermost);
            if a != b || !a.terms().all(|(t, _)| sys.is_irreducible(t)) {
                return Err(format!("weight {w}, column {col}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

pub fn envelope_bases() -> &'static [(EnvelopeKind, GroebnerBasis)] {
    static BASES: OnceLock<Vec<(EnvelopeKind, GroebnerBasis)>> = OnceLock::new();
    BASES.get_or_init(|| {
        EnvelopeKind::ALL
            .into_iter()
            .map(|k| (k, envelope_basis(k).expect("completion terminates")))
            .collect()
    })
}

/// Every composition of every envelope basis reduces to zero.
pub fn diamond_property() -> Result<usize, String> {
    let mut checked = 0;
    for (kind, gb) in envelope_bases() {
        for c in compositions(&gb.polynomials) {
            if !c.normal_form.is_zero() {
                return Err(format!("{}: composition {:?} gives {}", kind.name(), c.kind, c.normal_form));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn word(max_len: usize) -> impl proptest::strategy::Strategy<Value = NCWord> {
    proptest::collection::vec(0u8..4, 0..=max_len).prop_map(NCWord::new)
}

fn random_poly() -> impl proptest::strategy::Strategy<Value = NCPoly> {
    proptest::collection::vec((word(5), -3i64..=3), 1..6).prop_map(|terms| {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, BigRational::from_integer(c.into()));
        }
        p
    })
}

/// Normal forms are idempotent and kill u·g·v for basis elements g.
pub fn normal_form_projection(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(random_poly(), word(3), word(3), 0usize..3, 0usize..16), |(p, u, v, k, gi)| {
            let gb = &envelope_bases()[k].1;
            let nf = gb.normal_form(&p);
            prop_assert_eq!(gb.normal_form(&nf), nf.clone());
            let leads = gb.leading_words();
            prop_assert!(nf.terms().all(|(w, _)| leads.iter().all(|l| w.find(l).is_none())));
            let g = &gb.polynomials[gi % gb.polynomials.len()];
            prop_assert!(gb.normal_form(&g.sandwich(&u, &v)).is_zero());
            // p − nf(p) lies in the ideal, so p + u g v has the same normal form.
            prop_assert_eq!(gb.normal_form(&(&p + &g.sandwich(&u, &v))), nf);
            Ok(())
        })
        .map_err(|e| e.to_string())
}
