use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::EnvelopeError;
use crate::linalg::parse_rational;

/// A word in the free monoid on a, b, c, d (letters 0..4). Ordered by
/// length, then lexicographically with a ≺ b ≺ c ≺ d from the left.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCWord(Vec<u8>);

pub const LETTERS: usize = 4;

impl NCWord {
    pub fn one() -> Self {
        NCWord(Vec::new())
    }

    pub fn new(letters: Vec<u8>) -> Self {
        assert!(letters.iter().all(|&l| (l as usize) < LETTERS), "letter out of range");
        NCWord(letters)
    }

    pub fn letter(l: u8) -> Self {
        Self::new(vec![l])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &NCWord) -> NCWord {
        let mut v = self.0.clone();
        v.extend(&other.0);
        NCWord(v)
    }

    /// First position where `f` occurs as a factor.
    pub fn find(&self, f: &NCWord) -> Option<usize> {
        if f.len() > self.len() {
            return None;
        }
        (0..=self.len() - f.len()).find(|&i| self.0[i..i + f.len()] == f.0[..])
    }

    pub fn slice(&self, from: usize, to: usize) -> NCWord {
        NCWord(self.0[from..to].to_vec())
    }

    /// All words of length k in increasing order.
    pub fn all_of_length(k: usize) -> Vec<NCWord> {
        let mut out = vec![NCWord::one()];
        for _ in 0..k {
            out = out
                .iter()
                .flat_map(|w| (0..LETTERS as u8).map(move |l| w.concat(&NCWord::letter(l))))
                .collect();
        }
        out
    }

    /// Plain letters, "1" for the empty word.
    pub fn to_letters(&self) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0.iter().map(|&l| (b'a' + l) as char).collect()
    }
}

impl Ord for NCWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NCWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exponent notation, e.g. "ca^2"; "1" for the empty word.
impl fmt::Display for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            write!(f, "{}", (b'a' + l) as char)?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl fmt::Debug for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCWord({self})")
    }
}

/// A noncommutative polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<NCWord, BigRational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(NCWord::one())
    }

    pub fn from_word(w: NCWord) -> Self {
        let mut p = Self::zero();
        p.add_term(w, BigRational::one());
        p
    }

    pub fn letter(l: u8) -> Self {
        Self::from_word(NCWord::letter(l))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NCWord, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &NCWord) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, w: NCWord, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Greatest word and its coefficient.
    pub fn leading(&self) -> Option<(&NCWord, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_word(&self) -> Option<&NCWord> {
        self.leading().map(|(w, _)| w)
    }

    pub fn degree(&self) -> usize {
        self.leading_word().map_or(0, NCWord::len)
    }

    pub fn scale(&self, c: &BigRational) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> NCPoly {
        match self.leading() {
            None => NCPoly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// u · self · v.
    pub fn sandwich(&self, u: &NCWord, v: &NCWord) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (u.concat(w).concat(v), c.clone()))
                .collect(),
        }
    }

    /// File form: "+1*bac -1*abc +1*a", terms in decreasing order.
    pub fn to_line(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(w, c)| {
                let sign = if c.is_negative() { '-' } else { '+' };
                format!("{sign}{}*{}", c.abs(), w.to_letters())
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Decreasing order, exponent notation: "bc - a^2".
impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

impl PartialOrd for NCPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares by terms from the greatest word down.
impl Ord for NCPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms().rev().cmp(other.terms().rev())
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self + &(-rhs)
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

/// Parses "bc + ad - a^2", "+1*bac -1*abc +1*a", "1/2a + 1/2d", "2*1".
/// A letter may carry an exponent "^k"; "1" is the empty word.
impl FromStr for NCPoly {
    type Err = EnvelopeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let b = s.as_bytes();
        let mut i = 0;
        let mut out = NCPoly::zero();
        let err = |i: usize, m: &str| EnvelopeError::Parse(format!("{m} at byte {i} in {s:?}"));
        let skip = |i: &mut usize| {
            while *i < b.len() && b[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let mut first = true;
        loop {
            skip(&mut i);
            if i == b.len() {
                if first {
                    return Err(err(i, "empty polynomial"));
                }
                break;
            }
            let mut neg = false;
            if b[i] == b'+' || b[i] == b'-' {
                neg = b[i] == b'-';
                i += 1;
                skip(&mut i);
            } else if !first {
                return Err(err(i, "expected + or -"));
            }
            first = false;
            // Coefficient: digits with optional /digits. A bare "1" followed by
            // nothing word-like is the empty word with coefficient 1.
            let start = i;
            while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'/') {
                i += 1;
            }
            let mut coeff = BigRational::one();
            let mut word = Vec::new();
            let mut have_word = false;
            if i > start {
                let tok = &s[start..i];
                let c = parse_rational(tok).map_err(|_| err(start, "bad coefficient"))?;
                skip(&mut i);
                if i < b.len() && b[i] == b'*' {
                    i += 1;
                    skip(&mut i);
                }
                if i < b.len() && (b'a'..=b'd').contains(&b[i]) {
                    coeff = c;
                } else if i < b.len() && b[i] == b'1' {
                    coeff = c;
                    i += 1;
                    have_word = true;
                } else {
                    // A number on its own is a multiple of the empty word.
                    coeff = c;
                    have_word = true;
                }
            }
            while i < b.len() && (b'a'..=b'd').contains(&b[i]) {
                let l = b[i] - b'a';
                i += 1;
                let mut exp = 1usize;
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    let es = i;
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = s[es..i].parse().map_err(|_| err(es, "bad exponent"))?;
                }
                word.extend(std::iter::repeat(l).take(exp));
                have_word = true;
            }
            if !have_word {
                return Err(err(i, "expected a word"));
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(NCWord::new(word), coeff);
        }
        Ok(out)
    }
}
