use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;

use super::poly::{NCPoly, NCWord, LETTERS};
use super::EnvelopeError;

/// Default cap on the degree of polynomials produced during completion.
pub const DEFAULT_DEGREE_CAP: usize = 12;

/// Which ternary operation defines the triple system on 2×2 matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnvelopeKind {
    /// [X,Y,Z] = XYZ − YXZ.
    Commutator,
    /// <X,Y,Z> = XYZ − YZX.
    Translator,
    /// Both operations together.
    Comtrans,
}

impl EnvelopeKind {
    pub const ALL: [EnvelopeKind; 3] = [Self::Commutator, Self::Translator, Self::Comtrans];

    pub fn name(self) -> &'static str {
        match self {
            Self::Commutator => "commutator",
            Self::Translator => "translator",
            Self::Comtrans => "comtrans",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// Product of matrix units e_{ij} (letter 2i+j); `None` is the zero matrix.
fn unit_product(letters: &[u8]) -> Option<u8> {
    let mut acc = *letters.first()?;
    for &l in &letters[1..] {
        let (i, j) = (acc / 2, acc % 2);
        let (k, m) = (l / 2, l % 2);
        if j != k {
            return None;
        }
        acc = 2 * i + m;
    }
    Some(acc)
}

/// Word permutation `order` of (x, y, z) minus its image under η.
fn relation_part(triple: [u8; 3], order: [usize; 3]) -> NCPoly {
    let w: Vec<u8> = order.iter().map(|&i| triple[i]).collect();
    let mut p = NCPoly::from_word(NCWord::new(w.clone()));
    if let Some(l) = unit_product(&w) {
        p.add_term(NCWord::letter(l), -BigRational::one());
    }
    p
}

/// All 64 (or 128 for both operations) relations xyz − yxz − η([X,Y,Z]) and
/// xyz − yzx − η(<X,Y,Z>) over the matrix units, before any normalization.
pub fn triple_relations(kind: EnvelopeKind) -> Vec<NCPoly> {
    let mut out = Vec::new();
    let mut push = |swap: [usize; 3]| {
        for x in 0..LETTERS as u8 {
            for y in 0..LETTERS as u8 {
                for z in 0..LETTERS as u8 {
                    let t = [x, y, z];
                    out.push(&relation_part(t, [0, 1, 2]) - &relation_part(t, swap));
                }
            }
        }
    };
    if kind != EnvelopeKind::Translator {
        push([1, 0, 2]);
    }
    if kind != EnvelopeKind::Commutator {
        push([1, 2, 0]);
    }
    out
}

/// Fully reduces `p` modulo the leading words of `gens` (all monic).
pub fn normal_form(p: &NCPoly, gens: &[NCPoly]) -> NCPoly {
    reduce_except(p, gens, None)
}

fn reduce_except(p: &NCPoly, gens: &[NCPoly], skip: Option<usize>) -> NCPoly {
    let leads: Vec<(usize, &NCWord)> = gens
        .iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != skip)
        .filter_map(|(i, g)| g.leading_word().map(|w| (i, w)))
        .collect();
    let mut rem = p.clone();
    let mut out = NCPoly::zero();
    while let Some((w, c)) = rem.leading().map(|(w, c)| (w.clone(), c.clone())) {
        let hit = leads
            .iter()
            .find_map(|&(i, l)| w.find(l).map(|pos| (i, pos, l.len())));
        match hit {
            Some((i, pos, len)) => {
                let g = &gens[i];
                let lc = g.leading().expect("nonzero").1.clone();
                let u = w.slice(0, pos);
                let v = w.slice(pos + len, w.len());
                rem = &rem - &g.sandwich(&u, &v).scale(&(c / lc));
            }
            None => {
                rem.add_term(w.clone(), -c.clone());
                out.add_term(w, c);
            }
        }
    }
    out
}

/// Monic, duplicate free, and self-reduced: no leading word of one element
/// divides any word of another. Sorted by leading word.
pub fn standard_forms(polys: &[NCPoly]) -> Vec<NCPoly> {
    let mut set: Vec<NCPoly> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(NCPoly::monic)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    loop {
        set.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
        let mut changed = false;
        let mut i = 0;
        while i < set.len() {
            let r = reduce_except(&set[i], &set, Some(i)).monic();
            if r != set[i] {
                changed = true;
                if r.is_zero() {
                    set.remove(i);
                    continue;
                }
                set[i] = r;
            }
            i += 1;
        }
        if !changed {
            return set;
        }
    }
}

/// How two leading words meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapKind {
    /// A proper suffix of lead(f) equals a proper prefix of lead(g), of this length.
    Intersection(usize),
    /// lead(g) occurs in lead(f) at this position.
    Inclusion(usize),
}

/// A composition of two generators and its normal form.
#[derive(Debug, Clone)]
pub struct Composition {
    pub first: usize,
    pub second: usize,
    pub kind: OverlapKind,
    pub polynomial: NCPoly,
    pub normal_form: NCPoly,
}

/// All compositions of pairs (including self-overlaps), each reduced to
/// normal form modulo `gens`.
pub fn compositions(gens: &[NCPoly]) -> Vec<Composition> {
    let gens: Vec<NCPoly> = gens.iter().map(NCPoly::monic).collect();
    let mut out = Vec::new();
    for (i, f) in gens.iter().enumerate() {
        let Some(lf) = f.leading_word() else { continue };
        for (j, g) in gens.iter().enumerate() {
            let Some(lg) = g.leading_word() else { continue };
            for k in 1..lf.len().min(lg.len()) {
                if lf.letters()[lf.len() - k..] == lg.letters()[..k] {
                    let w = lg.slice(k, lg.len());
                    let u = lf.slice(0, lf.len() - k);
                    let s = &f.sandwich(&NCWord::one(), &w) - &g.sandwich(&u, &NCWord::one());
                    let nf = normal_form(&s, &gens);
                    out.push(Composition {
                        first: i,
                        second: j,
                        kind: OverlapKind::Intersection(k),
                        polynomial: s,
                        normal_form: nf,
                    });
                }
            }
            if i != j && lg.len() <= lf.len() {
                if let Some(pos) = lf.find(lg) {
                    let u = lf.slice(0, pos);
                    let v = lf.slice(pos + lg.len(), lf.len());
                    let s = f - &g.sandwich(&u, &v);
                    let nf = normal_form(&s, &gens);
                    out.push(Composition {
                        first: i,
                        second: j,
                        kind: OverlapKind::Inclusion(pos),
                        polynomial: s,
                        normal_form: nf,
                    });
                }
            }
        }
    }
    out
}

/// Distinct nonzero normal forms of compositions, made monic.
pub fn distinct_composition_forms(comps: &[Composition]) -> Vec<NCPoly> {
    comps
        .iter()
        .filter(|c| !c.normal_form.is_zero())
        .map(|c| c.normal_form.monic())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Completion statistics for one round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionRound {
    pub generators: usize,
    pub compositions: usize,
    pub new_polynomials: usize,
}

/// Gröbner–Shirshov basis and how it was reached.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub polynomials: Vec<NCPoly>,
    pub rounds: Vec<CompletionRound>,
}

impl GroebnerBasis {
    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        normal_form(p, &self.polynomials)
    }

    pub fn leading_words(&self) -> Vec<NCWord> {
        self.polynomials
            .iter()
            .filter_map(|p| p.leading_word().cloned())
            .collect()
    }

    /// Reduced words up to `max_degree`, and whether the set is finite
    /// (some degree ≤ `max_degree` has no reduced words).
    pub fn normal_words(&self, max_degree: usize) -> (Vec<NCWord>, bool) {
        normal_words(&self.polynomials, max_degree)
    }
}

/// Words not divisible by any leading word, by degree up to `max_degree`.
pub fn normal_words(gens: &[NCPoly], max_degree: usize) -> (Vec<NCWord>, bool) {
    let leads: Vec<&NCWord> = gens.iter().filter_map(NCPoly::leading_word).collect();
    let reduced = |w: &NCWord| leads.iter().all(|l| w.find(l).is_none());
    let mut out = Vec::new();
    let mut layer = vec![NCWord::one()];
    if !reduced(&layer[0]) {
        return (out, true);
    }
    for deg in 0..=max_degree {
        if deg > 0 {
            layer = layer
                .iter()
                .flat_map(|w| (0..LETTERS as u8).map(move |l| w.concat(&NCWord::letter(l))))
                .filter(|w| reduced(w))
                .collect();
        }
        if layer.is_empty() {
            return (out, true);
        }
        out.extend(layer.iter().cloned());
    }
    (out, false)
}

/// Buchberger-style completion: add all nonzero composition normal forms,
/// self-reduce, repeat until every composition reduces to zero.
pub fn groebner_completion(gens: &[NCPoly], degree_cap: usize) -> Result<GroebnerBasis, EnvelopeError> {
    let mut set = standard_forms(gens);
    let mut rounds = Vec::new();
    loop {
        if let Some(p) = set.iter().find(|p| p.degree() > degree_cap) {
            return Err(EnvelopeError::DegreeCap {
                cap: degree_cap,
                degree: p.degree(),
            });
        }
        let comps = compositions(&set);
        let new = distinct_composition_forms(&comps);
        rounds.push(CompletionRound {
            generators: set.len(),
            compositions: comps.len(),
            new_polynomials: new.len(),
        });
        if new.is_empty() {
            return Ok(GroebnerBasis {
                polynomials: set,
                rounds,
            });
        }
        if let Some(p) = new.iter().find(|p| p.degree() > degree_cap) {
            return Err(EnvelopeError::DegreeCap {
                cap: degree_cap,
                degree: p.degree(),
            });
        }
        set.extend(new);
        set = standard_forms(&set);
    }
}

/// Standard generators of the envelope ideal for `kind`.
pub fn envelope_generators(kind: EnvelopeKind) -> Vec<NCPoly> {
    standard_forms(&triple_relations(kind))
}

/// Gröbner–Shirshov basis of the envelope ideal for `kind`.
pub fn envelope_basis(kind: EnvelopeKind) -> Result<GroebnerBasis, EnvelopeError> {
    groebner_completion(&envelope_generators(kind), DEFAULT_DEGREE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_units_multiply() {
        assert_eq!(unit_product(&[1, 2]), Some(0)); // e12 e21 = e11
        assert_eq!(unit_product(&[0, 3]), None);
        assert_eq!(unit_product(&[1, 3, 2]), Some(0));
    }

    #[test]
    fn relation_counts() {
        assert_eq!(triple_relations(EnvelopeKind::Commutator).len(), 64);
        assert_eq!(triple_relations(EnvelopeKind::Comtrans).len(), 128);
    }

    #[test]
    fn free_algebra_modulo_letters() {
        let gens: Vec<NCPoly> = (0..4).map(NCPoly::letter).collect();
        let gb = groebner_completion(&gens, 4).unwrap();
        assert_eq!(gb.normal_words(3), (vec![NCWord::one()], true));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let braid = vec!["aba - bab".parse::<NCPoly>().unwrap()];
        assert!(matches!(
            groebner_completion(&braid, 6),
            Err(EnvelopeError::DegreeCap { cap: 6, .. })
        ));
    }
}
