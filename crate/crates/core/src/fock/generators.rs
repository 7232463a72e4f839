use std::fmt;

use serde::{Deserialize, Serialize};

use super::vector::SpaceDescriptor;
use super::FockError;
use crate::indexsets::Parity;
use crate::ring::{LaurentScalar, RationalScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Which algebra a generator belongs to: U_q(gl) or one of the ı/ȷ coideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenFamily {
    A,
    Jmath,
    Imath,
}

impl GenFamily {
    pub fn from_parity(p: Option<Parity>) -> GenFamily {
        match p {
            None => GenFamily::A,
            Some(Parity::Jmath) => GenFamily::Jmath,
            Some(Parity::Imath) => GenFamily::Imath,
        }
    }
}

/// Generator kinds; for the ı/ȷ families E/F/D/K stand for e/f/d/k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    E,
    F,
    D,
    DInv,
    K,
    KInv,
    T0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorSymbol {
    pub side: Side,
    pub family: GenFamily,
    pub kind: GenKind,
    pub index: i32,
}

impl GeneratorSymbol {
    pub fn new(side: Side, family: GenFamily, kind: GenKind, index: i32) -> Self {
        Self {
            side,
            family,
            kind,
            index,
        }
    }

    /// The generator family acting on the given side of a space.
    pub fn family_for(space: &SpaceDescriptor, side: Side) -> GenFamily {
        match side {
            Side::Left => GenFamily::from_parity(space.flavor.row_parity()),
            Side::Right => GenFamily::from_parity(space.flavor.col_parity()),
        }
    }

    /// Rank of the side: m for left, n for right.
    pub fn side_rank(space: &SpaceDescriptor, side: Side) -> usize {
        match side {
            Side::Left => space.m,
            Side::Right => space.n,
        }
    }

    pub fn is_index_legal(&self, rank: usize) -> bool {
        let r = rank as i32;
        let i = self.index;
        match (self.family, self.kind) {
            (GenFamily::A, GenKind::E | GenKind::F | GenKind::K | GenKind::KInv) => 1 <= i && i < r,
            (GenFamily::A, GenKind::D | GenKind::DInv) => 1 <= i && i <= r,
            (GenFamily::A, GenKind::T0) => false,
            (GenFamily::Jmath, GenKind::E | GenKind::F | GenKind::K | GenKind::KInv) => 0 <= i && i < r,
            (GenFamily::Jmath, GenKind::D | GenKind::DInv) => 0 <= i && i <= r,
            (GenFamily::Jmath, GenKind::T0) => false,
            (GenFamily::Imath, GenKind::E | GenKind::F | GenKind::K | GenKind::KInv) => 0 < i && i < r,
            (GenFamily::Imath, GenKind::D | GenKind::DInv) => 1 <= i && i <= r,
            (GenFamily::Imath, GenKind::T0) => i == 0 && r >= 1,
        }
    }

    /// Checks family and index range against a space.
    pub fn check(&self, space: &SpaceDescriptor) -> Result<(), FockError> {
        if self.family != Self::family_for(space, self.side) {
            return Err(FockError::FamilyMismatch {
                symbol: self.to_string(),
                space: space.to_string(),
            });
        }
        if !self.is_index_legal(Self::side_rank(space, self.side)) {
            return Err(FockError::IndexOutOfRange(self.to_string()));
        }
        Ok(())
    }

    /// Every generator (and inverse diagonal generator) of one side.
    pub fn all_for(space: &SpaceDescriptor, side: Side) -> Vec<GeneratorSymbol> {
        let family = Self::family_for(space, side);
        let r = Self::side_rank(space, side) as i32;
        let mut out = Vec::new();
        for kind in [
            GenKind::E,
            GenKind::F,
            GenKind::T0,
            GenKind::D,
            GenKind::DInv,
            GenKind::K,
            GenKind::KInv,
        ] {
            for i in -1..=r {
                let g = GeneratorSymbol::new(side, family, kind, i);
                if g.is_index_legal(r as usize) {
                    out.push(g);
                }
            }
        }
        out
    }

    /// Parses `E1`, `F2`, `D1`, `D1^-1`, `K1`, `e0`, `f1`, `d0^-1`, `k0`, `t0`.
    pub fn parse(side: Side, family: GenFamily, s: &str) -> Result<Self, FockError> {
        let bad = || FockError::Parse(s.to_string());
        let t = s.trim();
        let (body, inverse) = match t.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (t, false),
        };
        let mut chars = body.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let index: i32 = chars.as_str().parse().map_err(|_| bad())?;
        let kind = match (letter.to_ascii_lowercase(), inverse) {
            ('e', false) => GenKind::E,
            ('f', false) => GenKind::F,
            ('d', false) => GenKind::D,
            ('d', true) => GenKind::DInv,
            ('k', false) => GenKind::K,
            ('k', true) => GenKind::KInv,
            ('t', false) => GenKind::T0,
            _ => return Err(bad()),
        };
        Ok(Self::new(side, family, kind, index))
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upper = self.family == GenFamily::A;
        let (letter, inv) = match self.kind {
            GenKind::E => ('e', false),
            GenKind::F => ('f', false),
            GenKind::D => ('d', false),
            GenKind::DInv => ('d', true),
            GenKind::K => ('k', false),
            GenKind::KInv => ('k', true),
            GenKind::T0 => ('t', false),
        };
        let letter = if upper { letter.to_ascii_uppercase() } else { letter };
        write!(f, "{letter}{}", self.index)?;
        if inv {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// Scalar multiple of a product of generators from one side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorWord {
    pub coeff: RationalScalar,
    pub symbols: Vec<GeneratorSymbol>,
}

impl GeneratorWord {
    pub fn new(symbols: Vec<GeneratorSymbol>) -> Self {
        Self {
            coeff: RationalScalar::one(),
            symbols,
        }
    }

    pub fn with_coeff(coeff: RationalScalar, symbols: Vec<GeneratorSymbol>) -> Self {
        Self { coeff, symbols }
    }

    pub fn scaled_laurent(mut self, c: &LaurentScalar) -> Self {
        self.coeff = self.coeff.mul_laurent(c);
        self
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let syms: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        let body = if syms.is_empty() { "1".to_string() } else { syms.join(" ") };
        if self.coeff.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({}) {body}", self.coeff)
        }
    }
}

/// Formal sum of words; all symbols share one side and family.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneratorExpr {
    pub terms: Vec<GeneratorWord>,
}

impl GeneratorExpr {
    pub fn single(w: GeneratorWord) -> Self {
        Self { terms: vec![w] }
    }

    pub fn symbol(g: GeneratorSymbol) -> Self {
        Self::single(GeneratorWord::new(vec![g]))
    }

    /// (side, family) shared by all symbols, or an error if mixed.
    pub fn signature(&self) -> Result<Option<(Side, GenFamily)>, FockError> {
        let mut sig = None;
        for g in self.terms.iter().flat_map(|w| &w.symbols) {
            match sig {
                None => sig = Some((g.side, g.family)),
                Some(s) if s != (g.side, g.family) => return Err(FockError::MixedWord),
                _ => {}
            }
        }
        Ok(sig)
    }

    pub fn add(mut self, other: GeneratorExpr) -> GeneratorExpr {
        self.terms.extend(other.terms);
        self
    }

    pub fn scale(mut self, c: &RationalScalar) -> GeneratorExpr {
        for w in &mut self.terms {
            w.coeff = w.coeff.mul(c);
        }
        self
    }

    /// Algebra product self·other (concatenation of words).
    pub fn mul(&self, other: &GeneratorExpr) -> GeneratorExpr {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let mut symbols = a.symbols.clone();
                symbols.extend(b.symbols.iter().copied());
                terms.push(GeneratorWord::with_coeff(a.coeff.mul(&b.coeff), symbols));
            }
        }
        GeneratorExpr { terms }
    }

    /// Merges identical words and drops zero coefficients.
    pub fn simplify(&self) -> GeneratorExpr {
        let mut merged: Vec<GeneratorWord> = Vec::new();
        for w in &self.terms {
            if let Some(x) = merged.iter_mut().find(|x| x.symbols == w.symbols) {
                x.coeff = x.coeff.add(&w.coeff);
            } else {
                merged.push(w.clone());
            }
        }
        merged.retain(|w| !w.coeff.is_zero());
        GeneratorExpr { terms: merged }
    }
}

impl fmt::Display for GeneratorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Side-family pairing used for the transposition symmetry between sides.
pub(crate) fn swap_raising(kind: GenKind) -> GenKind {
    match kind {
        GenKind::E => GenKind::F,
        GenKind::F => GenKind::E,
        k => k,
    }
}
