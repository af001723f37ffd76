//! Parser for multilinear polynomials written with bracket notation, e.g.
//! `[[v,w,x],y,z] - 2*<v,w,[x,y,z]>`. Each operation is recognized by its
//! opening bracket; commas between arguments are optional. Variables are
//! single lowercase letters, renamed to x1, x2, ... in alphabetical order.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::tree::{op_token, validate};
use super::{MultilinearPoly, OperationSymbol, TermsError, TreeMonomial};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    ops: &'a [OperationSymbol],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> TermsError {
        TermsError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<BigRational> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let num: BigInt = std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let ds = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let den: BigInt = std::str::from_utf8(&self.s[ds..self.pos]).ok()?.parse().ok()?;
            if den.is_zero() {
                return None;
            }
            return Some(BigRational::new(num, den));
        }
        Some(BigRational::from_integer(num))
    }

    /// A tree with letters as leaves (letters stored as raw bytes for now).
    fn tree(&mut self, out: &mut Vec<u8>) -> Result<(), TermsError> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end"))?;
        if c.is_ascii_lowercase() {
            self.pos += 1;
            out.push(c);
            return Ok(());
        }
        let k = self
            .ops
            .iter()
            .position(|o| o.brackets().0 as u32 == c as u32)
            .ok_or_else(|| self.err("unknown bracket"))?;
        let close = self.ops[k].brackets().1 as u32 as u8;
        self.pos += 1;
        out.push(op_token(k));
        for i in 0..3 {
            if i > 0 && self.peek() == Some(b',') {
                self.pos += 1;
            }
            self.tree(out)?;
        }
        if self.peek() != Some(close) {
            return Err(self.err("expected closing bracket"));
        }
        self.pos += 1;
        Ok(())
    }
}

/// Parses a polynomial in bracket notation over the given operations.
pub fn parse_poly(text: &str, ops: &[OperationSymbol]) -> Result<MultilinearPoly, TermsError> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
        ops,
    };
    let mut raw: Vec<(BigRational, Vec<u8>)> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = BigRational::one();
        match p.peek() {
            None if !first => break,
            None => return Err(p.err("empty polynomial")),
            Some(b'+') => p.pos += 1,
            Some(b'-') => {
                p.pos += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(_) => return Err(p.err("expected + or -")),
        }
        first = false;
        let coeff = match p.number() {
            Some(c) => {
                if p.peek() == Some(b'*') {
                    p.pos += 1;
                }
                c
            }
            None => BigRational::one(),
        };
        let mut tokens = Vec::new();
        p.tree(&mut tokens)?;
        raw.push((sign * coeff, tokens));
    }
    let letters: BTreeSet<u8> = raw
        .iter()
        .flat_map(|(_, t)| t.iter().copied().filter(|c| c.is_ascii_lowercase()))
        .collect();
    let letters: Vec<u8> = letters.into_iter().collect();
    let degree = letters.len();
    if degree % 2 == 0 {
        return Err(TermsError::NotMultilinear);
    }
    let mut f = MultilinearPoly::zero(degree);
    for (c, tokens) in raw {
        let mapped: Vec<u8> = tokens
            .iter()
            .map(|&t| {
                if t.is_ascii_lowercase() {
                    letters.binary_search(&t).expect("collected") as u8
                } else {
                    t
                }
            })
            .collect();
        validate(&mapped)?;
        f.add_term(TreeMonomial::from_tokens(mapped), c);
    }
    Ok(f)
}
