use std::fmt;
use std::str::FromStr;

use super::SymmetricError;

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, SymmetricError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(SymmetricError::BadPartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        Partition {
            parts: (0..cols)
                .map(|c| self.parts.iter().filter(|&&r| r > c).count())
                .collect(),
        }
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dim(&self) -> usize {
        let n = self.weight();
        let conj = self.conjugate();
        let mut num: u128 = (1..=n as u128).product();
        let mut den: u128 = 1;
        for (i, &r) in self.parts.iter().enumerate() {
            for j in 0..r {
                let hook = (r - j - 1) + (conj.parts[j] - i - 1) + 1;
                den *= hook as u128;
            }
        }
        num /= den;
        num as usize
    }
}

/// All partitions of n, largest first part first (descending lexicographic).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

pub fn dim_irrep(lambda: &Partition) -> usize {
    lambda.dim()
}

/// Exponent notation: runs of equal parts written as `part^count`,
/// e.g. 3+2+1+1 is "321^2" and 3+3+1 is "3^21".
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if self.weight() >= 10 {
                write!(f, "({p})")?;
            } else {
                write!(f, "{p}")?;
            }
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses single-digit parts, each optionally followed by `^` and a
/// single-digit exponent: "7", "61", "51^2", "3^21", "2^21^3".
impl FromStr for Partition {
    type Err = SymmetricError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SymmetricError::BadPartition(s.to_string());
        let chars: Vec<char> = s.trim().chars().collect();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let p = chars[i].to_digit(10).ok_or_else(bad)? as usize;
            i += 1;
            let mut count = 1;
            if i < chars.len() && chars[i] == '^' {
                count = chars
                    .get(i + 1)
                    .and_then(|c| c.to_digit(10))
                    .ok_or_else(bad)? as usize;
                i += 2;
            }
            if p == 0 || count == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(p, count));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad());
        }
        Partition::new(parts)
    }
}
