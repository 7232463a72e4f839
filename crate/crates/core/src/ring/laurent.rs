use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::RingError;

/// Element of Z[q, q^-1]. Invariant: no stored coefficient is zero, so the
/// map itself is the canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn q_pow(k: i64) -> Self {
        Self::monomial(1, k)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns (c, k) when the value is the single term c*q^k.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c, *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The bar involution q -> q^-1.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at q = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by another Laurent polynomial, when the quotient exists.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (lo_o, hi_o) = (other.min_exp()?, other.max_exp()?);
        let lead_o = other.terms[&hi_o].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(hi) = rem.max_exp() {
            if hi - hi_o < rem.min_exp().unwrap() - lo_o {
                return None;
            }
            let c = rem.terms[&hi].clone();
            if !(&c % &lead_o).is_zero() {
                return None;
            }
            let t = Self::monomial(&c / &lead_o, hi - hi_o);
            rem = &rem - &(&t * other);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Returns (c, s, n) with self = c·q^s·[n] and n ≥ 1, when the value has
    /// that shape (equal coefficients on exponents spaced by 2).
    pub fn as_quantum_integer(&self) -> Option<(BigInt, i64, i64)> {
        let (lo, hi) = (self.min_exp()?, self.max_exp()?);
        let c = self.terms[&lo].clone();
        let n = self.terms.len() as i64;
        if hi - lo != 2 * (n - 1) {
            return None;
        }
        let regular = self
            .terms
            .iter()
            .enumerate()
            .all(|(k, (e, x))| *e == lo + 2 * k as i64 && *x == c);
        regular.then(|| (c, (lo + hi) / 2, n))
    }

    /// Machine form: sorted list of (exponent, decimal coefficient string).
    pub fn to_machine(&self) -> Vec<(i64, String)> {
        self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect()
    }

    pub fn from_machine(pairs: &[(i64, String)]) -> Result<Self, RingError> {
        let mut out = Self::zero();
        for (e, s) in pairs {
            let c = BigInt::from_str(s).map_err(|_| RingError::Parse(s.clone()))?;
            out.add_term(*e, c);
        }
        Ok(out)
    }
}

impl From<i64> for LaurentScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &BigInt, e: i64) -> fmt::Result {
    let unit = c.is_one();
    match e {
        0 => write!(f, "{c}"),
        1 if unit => write!(f, "q"),
        1 => write!(f, "{c}*q"),
        _ if unit => write!(f, "q^{e}"),
        _ => write!(f, "{c}*q^{e}"),
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, &c.abs(), *e)?;
        }
        Ok(())
    }
}

impl FromStr for LaurentScalar {
    type Err = RingError;

    /// Accepts sums of `c*q^k`, `c*q`, `q^k`, `q`, `c` terms joined by `+`/`-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RingError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut out = Self::zero();
        let bytes: Vec<char> = compact.chars().collect();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut negative = false;
            if bytes[pos] == '+' || bytes[pos] == '-' {
                negative = bytes[pos] == '-';
                pos += 1;
            } else if pos != 0 {
                return Err(err());
            }
            // A term ends at the next sign that is not an exponent sign.
            let start = pos;
            while pos < bytes.len() {
                let ch = bytes[pos];
                if (ch == '+' || ch == '-') && pos > start && bytes[pos - 1] != '^' {
                    break;
                }
                pos += 1;
            }
            let term: String = bytes[start..pos].iter().collect();
            if term.is_empty() {
                return Err(err());
            }
            let (coeff, exp) = parse_term(&term).ok_or_else(err)?;
            out.add_term(exp, if negative { -coeff } else { coeff });
        }
        Ok(out)
    }
}

fn parse_term(t: &str) -> Option<(BigInt, i64)> {
    let (coeff_part, q_part) = match t.find('q') {
        None => return BigInt::from_str(t).ok().map(|c| (c, 0)),
        Some(i) => (&t[..i], &t[i..]),
    };
    let coeff = if coeff_part.is_empty() {
        BigInt::one()
    } else {
        BigInt::from_str(coeff_part.strip_suffix('*')?).ok()?
    };
    let exp = if q_part == "q" {
        1
    } else {
        q_part.strip_prefix("q^")?.parse::<i64>().ok()?
    };
    Some((coeff, exp))
}

impl Serialize for LaurentScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentScalar> for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: &LaurentScalar) -> LaurentScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentScalar> for &LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: LaurentScalar) -> LaurentScalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

/// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}, with [-n] = -[n].
pub fn quantum_integer(n: i64) -> LaurentScalar {
    let m = n.abs();
    let mut out = LaurentScalar::zero();
    for k in 0..m {
        out.add_term(m - 1 - 2 * k, BigInt::one());
    }
    if n < 0 {
        -out
    } else {
        out
    }
}

pub fn quantum_factorial(n: i64) -> Result<LaurentScalar, RingError> {
    if n < 0 {
        return Err(RingError::NegativeFactorial(n));
    }
    let mut acc = LaurentScalar::one();
    for k in 1..=n {
        acc = &acc * &quantum_integer(k);
    }
    Ok(acc)
}

/// [n]!! = [n][n-2]...[2] for even n, with [0]!! = 1.
pub fn quantum_double_factorial(n: i64) -> Result<LaurentScalar, RingError> {
    if n < 0 {
        return Err(RingError::NegativeFactorial(n));
    }
    if n % 2 != 0 {
        return Err(RingError::OddDoubleFactorial(n));
    }
    let mut acc = LaurentScalar::one();
    let mut k = n;
    while k > 0 {
        acc = &acc * &quantum_integer(k);
        k -= 2;
    }
    Ok(acc)
}

pub fn bar(x: &LaurentScalar) -> LaurentScalar {
    x.bar()
}
