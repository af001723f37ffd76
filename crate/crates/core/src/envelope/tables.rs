use std::fmt;

use super::groebner::GroebnerBasis;
use super::poly::NCPoly;

/// Printed nonzero products of basis words of U(A^C), as (left, right, value).
pub const PRINTED_COMMUTATOR_TABLE: [(&str, &str, &str); 32] = [
    ("a", "a", "a^2"),
    ("a", "b", "ab"),
    ("a", "a^2", "a"),
    ("a", "ab", "b"),
    ("b", "c", "a^2"),
    ("b", "d", "ac"),
    ("b", "ca", "a"),
    ("b", "cb", "b"),
    ("c", "a", "ca"),
    ("c", "b", "cb"),
    ("c", "a^2", "c"),
    ("c", "ab", "d"),
    ("d", "c", "ca"),
    ("d", "d", "cb"),
    ("d", "ca", "c"),
    ("d", "cb", "d"),
    ("a^2", "a", "a"),
    ("a^2", "b", "b"),
    ("a^2", "a^2", "a^2"),
    ("a^2", "ab", "ab"),
    ("ab", "c", "a"),
    ("ab", "d", "b"),
    ("ab", "ca", "a^2"),
    ("ab", "cb", "ab"),
    ("ca", "a", "c"),
    ("ca", "b", "d"),
    ("ca", "a^2", "ca"),
    ("ca", "ab", "cb"),
    ("cb", "c", "c"),
    ("ca", "d", "d"),
    ("cb", "ca", "ca"),
    ("cb", "cb", "cb"),
];

/// Printed individual products of U(A^T) outside the parametrized families.
pub const PRINTED_TRANSLATOR_PRODUCTS: [(&str, &str, &str); 25] = [
    ("b", "c", "-ad + a^2"),
    ("b", "ca", "-a^2d + a^3"),
    ("b", "cb", "b"),
    ("b", "d", "ab"),
    ("c", "b", "cb"),
    ("c", "ab", "-a^2d + a^3 + d - a"),
    ("ab", "c", "-a^2d + a^3"),
    ("ab", "ca", "-ad + a^2"),
    ("ab", "cb", "ab"),
    ("ca", "b", "-a^2d + a^3 + d - a"),
    ("ca", "ab", "cb"),
    ("cb", "c", "c"),
    ("cb", "ca", "ca"),
    ("cb", "cb", "cb"),
    ("cb", "d", "-a^2d + a^3 + d - a"),
    ("d", "c", "ca"),
    ("d", "d", "cb + ad"),
    ("d", "ca", "c"),
    ("d", "cb", "-a^2d + a^3 + d - a"),
    ("ad", "ca", "ac"),
    ("ad", "d", "ad^2"),
    ("ad", "ad", "a^4 + ad - a^2"),
    ("ad", "a^2d", "a^5 - a^3 + a^2d"),
    ("a^2d", "a^2d", "a^6 + ad - a^2"),
    ("a", "a^2d", "a^4 + ad - a^2"),
];

/// One printed product checked against the Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCheck {
    /// Which table or family the entry comes from.
    pub source: &'static str,
    /// The printed claim, e.g. "b·d = ac".
    pub claim: String,
    /// Normal form of the product.
    pub computed: NCPoly,
    /// Normal form of the printed value.
    pub printed: NCPoly,
}

impl ProductCheck {
    pub fn matches(&self) -> bool {
        self.computed == self.printed
    }
}

impl fmt::Display for ProductCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.matches() { "ok" } else { "MISMATCH" };
        write!(f, "[{}] {}: {status}", self.source, self.claim)?;
        if !self.matches() {
            write!(f, " (computed {})", self.computed)?;
        }
        Ok(())
    }
}

fn poly(s: &str) -> NCPoly {
    s.parse().expect("valid table entry")
}

fn power(m: usize) -> String {
    match m {
        0 => "1".into(),
        1 => "a".into(),
        _ => format!("a^{m}"),
    }
}

fn check(gb: &GroebnerBasis, source: &'static str, claim: String, lhs: &NCPoly, rhs: &NCPoly) -> ProductCheck {
    ProductCheck {
        source,
        claim,
        computed: gb.normal_form(lhs),
        printed: gb.normal_form(rhs),
    }
}

fn check_table(gb: &GroebnerBasis, source: &'static str, table: &[(&str, &str, &str)]) -> Vec<ProductCheck> {
    table
        .iter()
        .map(|(u, v, w)| {
            let claim = format!("{u}·{v} = {w}");
            check(gb, source, claim, &(&poly(u) * &poly(v)), &poly(w))
        })
        .collect()
}

/// Checks the printed U(A^C) product table against `gb` (the basis of I^C).
pub fn check_commutator_table(gb: &GroebnerBasis) -> Vec<ProductCheck> {
    check_table(gb, "U(A^C) table", &PRINTED_COMMUTATOR_TABLE)
}

/// Right-hand side of the threshold rule for a^k d.
fn threshold_value(k: usize) -> NCPoly {
    let a = |m: usize| poly(&power(m));
    let d = poly("d");
    if k < 3 {
        &a(k) * &d
    } else {
        &(&a(k + 1) + &(&a(k - 2) * &d)) - &a(k - 1)
    }
}

/// Checks the printed U(A^T) formulas against `gb` (the basis of I^T):
/// the families with exponents up to `max_m`, then the individual products.
///
/// The power rule is checked as printed (a^m·a^l = a^{m+n}); the entries
/// with l ≠ n fail and are collapsed into one family entry.
pub fn verify_translator_formulas(gb: &GroebnerBasis, max_m: usize) -> Vec<ProductCheck> {
    let mut out = Vec::new();
    let a = |m: usize| poly(&power(m));
    let ad = |n: usize| &a(n) * &poly("d");

    // a^m · a^l = a^{m+n}, 0 ≤ n ≤ 2, taken literally.
    let mut literal = Vec::new();
    for m in 0..=max_m {
        for l in 0..=max_m {
            for n in 0..=2 {
                literal.push(check(
                    gb,
                    "U(A^T) family (a)",
                    format!("a^{m}·a^{l} = a^{{{m}+{n}}}"),
                    &(&a(m) * &a(l)),
                    &a(m + n),
                ));
            }
        }
    }
    let bad: Vec<&ProductCheck> = literal.iter().filter(|c| !c.matches()).collect();
    if let Some(first) = bad.first() {
        out.push(ProductCheck {
            source: "U(A^T) family (a)",
            claim: format!("a^m·a^l = a^{{m+n}} ({} of {} instances fail)", bad.len(), literal.len()),
            computed: first.computed.clone(),
            printed: first.printed.clone(),
        });
    } else {
        out.push(literal.swap_remove(0));
    }
    for m in 0..=max_m {
        for l in 0..=max_m {
            out.push(check(
                gb,
                "U(A^T) family (a), corrected",
                format!("a^{m}·a^{l} = a^{}", m + l),
                &(&a(m) * &a(l)),
                &a(m + l),
            ));
        }
        let v = if m % 2 == 1 { "ab" } else { "b" };
        out.push(check(gb, "U(A^T) family (a)", format!("a^{m}·b = {v}"), &(&a(m) * &poly("b")), &poly(v)));
        let v = if m % 2 == 1 { "ca" } else { "c" };
        out.push(check(gb, "U(A^T) c·a^m", format!("c·a^{m} = {v}"), &(&poly("c") * &a(m)), &poly(v)));
        for n in 0..=2 {
            let rhs = threshold_value(m + n);
            out.push(check(
                gb,
                "U(A^T) family (b)",
                format!("a^{m}·a^{n}d = {rhs}"),
                &(&a(m) * &ad(n)),
                &rhs,
            ));
            out.push(check(
                gb,
                "U(A^T) a^n d·a^m",
                format!("a^{n}d·a^{m} = {rhs}"),
                &(&ad(n) * &a(m)),
                &rhs,
            ));
        }
    }
    out.extend(check_table(gb, "U(A^T) products", &PRINTED_TRANSLATOR_PRODUCTS));
    out
}

/// Every printed entry that disagrees with the Gröbner bases.
pub fn discrepancy_report(gb_commutator: &GroebnerBasis, gb_translator: &GroebnerBasis, max_m: usize) -> Vec<ProductCheck> {
    check_commutator_table(gb_commutator)
        .into_iter()
        .chain(verify_translator_formulas(gb_translator, max_m))
        .filter(|c| !c.matches())
        .collect()
}
