use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CoordError;
use crate::ring::LaurentScalar;

/// One letter t_{ij}.
pub type Letter = (i32, i32);

/// Which coordinate object a word lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoordFlavor {
    A,
    Bj,
    Bi,
}

/// A word t_{i1 j1} ... t_{ik jk} with row range of rank `m` and column range
/// of rank `n` (1..=r for A, -r..=r for B).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoordWord {
    pub flavor: CoordFlavor,
    pub m: usize,
    pub n: usize,
    pub letters: Vec<Letter>,
}

impl CoordWord {
    pub fn new(flavor: CoordFlavor, m: usize, n: usize, letters: Vec<Letter>) -> Result<Self, CoordError> {
        let w = Self { flavor, m, n, letters };
        for &(i, j) in &w.letters {
            w.check_letter(i, j)?;
        }
        Ok(w)
    }

    fn check_letter(&self, i: i32, j: i32) -> Result<(), CoordError> {
        let (m, n) = (self.m as i32, self.n as i32);
        let ok = match self.flavor {
            CoordFlavor::A => (1..=m).contains(&i) && (1..=n).contains(&j),
            _ => (-m..=m).contains(&i) && (-n..=n).contains(&j),
        };
        if !ok {
            return Err(CoordError::LetterOutOfRange(i, j));
        }
        if self.flavor == CoordFlavor::Bi && (i == 0 || j == 0) {
            return Err(CoordError::ForbiddenLetter(i, j));
        }
        Ok(())
    }

    /// Parses `t[1,2] t[2,1]`; whitespace between letters is optional.
    pub fn parse(flavor: CoordFlavor, m: usize, n: usize, s: &str) -> Result<Self, CoordError> {
        let letters = parse_letters(s)?;
        Self::new(flavor, m, n, letters)
    }
}

pub(crate) fn parse_letters(s: &str) -> Result<Vec<Letter>, CoordError> {
    let err = || CoordError::Parse(s.to_string());
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix("t[").ok_or_else(err)?;
        let close = body.find(']').ok_or_else(err)?;
        let (a, b) = body[..close].split_once(',').ok_or_else(err)?;
        let i = a.trim().parse().map_err(|_| err())?;
        let j = b.trim().parse().map_err(|_| err())?;
        out.push((i, j));
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

impl fmt::Display for CoordWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|(i, j)| format!("t[{i},{j}]")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Formal combination of words with Laurent coefficients; zero terms are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordSum {
    terms: BTreeMap<Vec<Letter>, LaurentScalar>,
}

impl WordSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(word: Vec<Letter>) -> Self {
        let mut s = Self::zero();
        s.add_term(word, &LaurentScalar::one());
        s
    }

    pub fn add_term(&mut self, word: Vec<Letter>, c: &LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &WordSum, c: &LaurentScalar) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), &(v * c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &LaurentScalar)> {
        self.terms.iter()
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
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let letters: Vec<String> = w.iter().map(|(i, j)| format!("t[{i},{j}]")).collect();
                format!("({c}) * {}", if letters.is_empty() { "1".to_string() } else { letters.join(" ") })
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for CoordFlavor {
    type Err = CoordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" => Ok(CoordFlavor::A),
            "Bj" => Ok(CoordFlavor::Bj),
            "Bi" => Ok(CoordFlavor::Bi),
            other => Err(CoordError::Parse(other.to_string())),
        }
    }
}
