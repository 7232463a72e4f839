//! Basis label sets: Θ (type A) and Ξ (types B/C with ı/ȷ flavors), compositions
//! and bipartitions.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub const DEFAULT_ENUMERATION_CAP: u128 = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("index set would contain {count} labels, above the cap of {cap}")]
    CapExceeded { count: u128, cap: u128 },
    #[error("invalid matrix: {0}")]
    Invalid(String),
    #[error("operation requires a {expected} flavor, got {found}")]
    WrongFlavor { expected: &'static str, found: Flavor },
    #[error("unknown flavor {0:?}")]
    UnknownFlavor(String),
    #[error("sizes must be positive for an ı flavor")]
    EmptyImath,
}

/// The two symmetric-pair types: ı (even ambient rank) and ȷ (odd ambient rank).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Imath,
    Jmath,
}

impl Parity {
    pub fn letter(self) -> char {
        match self {
            Parity::Imath => 'i',
            Parity::Jmath => 'j',
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Imath => "ı",
            Parity::Jmath => "ȷ",
        })
    }
}

/// Flavor of a label set; (row parity, column parity) for B and C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    A,
    B(Parity, Parity),
    C(Parity, Parity),
}

impl Flavor {
    pub fn is_symmetric(self) -> bool {
        !matches!(self, Flavor::A)
    }

    pub fn row_parity(self) -> Option<Parity> {
        match self {
            Flavor::A => None,
            Flavor::B(b, _) | Flavor::C(b, _) => Some(b),
        }
    }

    pub fn col_parity(self) -> Option<Parity> {
        match self {
            Flavor::A => None,
            Flavor::B(_, c) | Flavor::C(_, c) => Some(c),
        }
    }

    pub fn transpose(self) -> Flavor {
        match self {
            Flavor::A => Flavor::A,
            Flavor::B(b, c) => Flavor::B(c, b),
            Flavor::C(b, c) => Flavor::C(c, b),
        }
    }

    /// Short ASCII name: `A`, `Bjj`, `Bji`, `Bij`, `Bii`, `Cjj`, ...
    pub fn code(self) -> String {
        match self {
            Flavor::A => "A".into(),
            Flavor::B(b, c) => format!("B{}{}", b.letter(), c.letter()),
            Flavor::C(b, c) => format!("C{}{}", b.letter(), c.letter()),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl FromStr for Flavor {
    type Err = IndexError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let par = |c: char| match c {
            'i' | 'ı' => Some(Parity::Imath),
            'j' | 'ȷ' => Some(Parity::Jmath),
            _ => None,
        };
        let chars: Vec<char> = s.chars().collect();
        match chars.as_slice() {
            ['A'] => Ok(Flavor::A),
            [t @ ('B' | 'C'), b, c] => {
                let (b, c) = par(*b)
                    .zip(par(*c))
                    .ok_or_else(|| IndexError::UnknownFlavor(s.into()))?;
                Ok(if *t == 'B' { Flavor::B(b, c) } else { Flavor::C(b, c) })
            }
            _ => Err(IndexError::UnknownFlavor(s.into())),
        }
    }
}

impl Serialize for Flavor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.code())
    }
}

impl<'de> Deserialize<'de> for Flavor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A flavored nonnegative integer matrix. Rows are indexed 1..=m (A) or
/// -m..=m (B/C), columns likewise; B/C matrices are stored in full.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexMatrix {
    flavor: Flavor,
    m: usize,
    n: usize,
    d: usize,
    entries: Vec<u32>,
}

fn dim_of(flavor: Flavor, k: usize) -> usize {
    if flavor.is_symmetric() {
        2 * k + 1
    } else {
        k
    }
}

impl IndexMatrix {
    /// Zero matrix (not necessarily valid) with the given shape.
    fn blank(flavor: Flavor, m: usize, n: usize, d: usize) -> Self {
        Self {
            flavor,
            m,
            n,
            d,
            entries: vec![0; dim_of(flavor, m) * dim_of(flavor, n)],
        }
    }

    /// Builds from rows listed from the lowest row index, inferring d, and validates.
    pub fn from_rows(flavor: Flavor, rows: &[Vec<u32>]) -> Result<Self, IndexError> {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != nc) {
            return Err(IndexError::Invalid("ragged rows".into()));
        }
        let (m, n) = if flavor.is_symmetric() {
            if nr.is_multiple_of(2) || nc.is_multiple_of(2) {
                return Err(IndexError::Invalid("B/C matrices need odd dimensions".into()));
            }
            (nr / 2, nc / 2)
        } else {
            (nr, nc)
        };
        let total: u64 = rows.iter().flatten().map(|&x| u64::from(x)).sum();
        let d = match flavor {
            Flavor::A => total,
            Flavor::B(..) => total.saturating_sub(1) / 2,
            Flavor::C(..) => total / 2,
        } as usize;
        let a = Self {
            flavor,
            m,
            n,
            d,
            entries: rows.iter().flatten().copied().collect(),
        };
        a.validate()?;
        Ok(a)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn d(&self) -> usize {
        self.d
    }
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn nrows(&self) -> usize {
        dim_of(self.flavor, self.m)
    }
    pub fn ncols(&self) -> usize {
        dim_of(self.flavor, self.n)
    }

    pub fn rows(&self) -> RangeInclusive<i32> {
        if self.flavor.is_symmetric() {
            -(self.m as i32)..=self.m as i32
        } else {
            1..=self.m as i32
        }
    }

    pub fn cols(&self) -> RangeInclusive<i32> {
        if self.flavor.is_symmetric() {
            -(self.n as i32)..=self.n as i32
        } else {
            1..=self.n as i32
        }
    }

    fn offset(&self, i: i32, j: i32) -> Option<usize> {
        let (ri, cj) = if self.flavor.is_symmetric() {
            (i + self.m as i32, j + self.n as i32)
        } else {
            (i - 1, j - 1)
        };
        if ri < 0 || cj < 0 || ri as usize >= self.nrows() || cj as usize >= self.ncols() {
            None
        } else {
            Some(ri as usize * self.ncols() + cj as usize)
        }
    }

    /// Entry a_ij; zero outside the index range.
    pub fn get(&self, i: i32, j: i32) -> u32 {
        self.offset(i, j).map_or(0, |o| self.entries[o])
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&x| u64::from(x)).sum()
    }

    /// Row i as a vector over the column range.
    pub fn row_vec(&self, i: i32) -> Vec<u32> {
        self.cols().map(|j| self.get(i, j)).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<u32>> {
        self.rows().map(|i| self.row_vec(i)).collect()
    }

    pub fn ro(&self, i: i32) -> u32 {
        self.cols().map(|j| self.get(i, j)).sum()
    }

    pub fn co(&self, j: i32) -> u32 {
        self.rows().map(|i| self.get(i, j)).sum()
    }

    /// Adds `delta` at (i, j) without symmetrization; None if an entry would
    /// become negative or the position is out of range.
    fn bump(&mut self, i: i32, j: i32, delta: i32) -> Option<()> {
        let o = self.offset(i, j)?;
        let v = self.entries[o] as i64 + delta as i64;
        if v < 0 {
            return None;
        }
        self.entries[o] = v as u32;
        Some(())
    }

    /// A + Σ δ·E_ij (type A) or A + Σ δ·E^θ_ij (B/C, with E^θ_00 = 2E_00).
    /// Returns None when an entry would become negative. The result carries
    /// the same d, so moves must preserve the total.
    pub fn moved(&self, moves: &[(i32, i32, i32)]) -> Option<IndexMatrix> {
        let mut out = self.clone();
        for &(i, j, delta) in moves {
            out.bump(i, j, delta)?;
            if self.flavor.is_symmetric() {
                out.bump(-i, -j, delta)?;
            }
        }
        Some(out)
    }

    /// Adds `delta` to the single entry (i, j), ignoring symmetry; used by
    /// validators and the type-C shift.
    pub fn with_raw_entry(&self, i: i32, j: i32, delta: i32) -> Option<IndexMatrix> {
        let mut out = self.clone();
        out.bump(i, j, delta)?;
        Some(out)
    }

    pub fn validate(&self) -> Result<(), IndexError> {
        let bad = |s: String| Err(IndexError::Invalid(s));
        if self.entries.len() != self.nrows() * self.ncols() {
            return bad("entry count does not match shape".into());
        }
        let total = self.total();
        match self.flavor {
            Flavor::A => {
                if total != self.d as u64 {
                    return bad(format!("total {total} != d = {}", self.d));
                }
            }
            Flavor::B(b, c) | Flavor::C(b, c) => {
                let is_b = matches!(self.flavor, Flavor::B(..));
                for i in self.rows() {
                    for j in self.cols() {
                        if self.get(i, j) != self.get(-i, -j) {
                            return bad(format!("not θ-symmetric at ({i},{j})"));
                        }
                    }
                }
                let expected = if is_b { 2 * self.d + 1 } else { 2 * self.d } as u64;
                if total != expected {
                    return bad(format!("total {total} != {expected}"));
                }
                let a00 = self.get(0, 0);
                if is_b && a00.is_multiple_of(2) {
                    return bad("a00 must be odd".into());
                }
                // ı on the row side: row 0 is concentrated at the center.
                if b == Parity::Imath {
                    if self.cols().any(|j| j != 0 && self.get(0, j) != 0) {
                        return bad("row 0 must vanish off the center for row flavor ı".into());
                    }
                    if a00 != u32::from(is_b) {
                        return bad("center entry fixed by row flavor ı".into());
                    }
                }
                if c == Parity::Imath {
                    if self.rows().any(|i| i != 0 && self.get(i, 0) != 0) {
                        return bad("column 0 must vanish off the center for column flavor ı".into());
                    }
                    if a00 != u32::from(is_b) {
                        return bad("center entry fixed by column flavor ı".into());
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows()
            .all(|i| self.cols().all(|j| i == j || self.get(i, j) == 0))
    }

    /// Human-readable label: nested rows for A, E-sum for B/C.
    pub fn label(&self) -> String {
        if !self.flavor.is_symmetric() {
            let rows: Vec<String> = self
                .rows_vec()
                .iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(u32::to_string).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            return format!("[{}]", rows.join(","));
        }
        let mut parts = Vec::new();
        let a00 = self.get(0, 0);
        if a00 > 0 {
            parts.push(if a00 == 1 { "E00".to_string() } else { format!("{a00}E00") });
        }
        for i in self.rows() {
            for j in self.cols() {
                if (i, j) <= (0, 0) {
                    continue;
                }
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                let coef = if a == 1 { String::new() } else { a.to_string() };
                let idx = if i < 0 || j < 0 { format!("{i},{j}") } else { format!("{i}{j}") };
                parts.push(format!("{coef}E{idx}^θ"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Debug for IndexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.flavor, self.label())
    }
}

impl fmt::Display for IndexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    flavor: Flavor,
    m: usize,
    n: usize,
    d: usize,
    rows: Vec<Vec<u32>>,
}

impl Serialize for IndexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixWire {
            flavor: self.flavor,
            m: self.m,
            n: self.n,
            d: self.d,
            rows: self.rows_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IndexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = MatrixWire::deserialize(d)?;
        let a = IndexMatrix::from_rows(w.flavor, &w.rows).map_err(serde::de::Error::custom)?;
        if (a.m, a.n, a.d) != (w.m, w.n, w.d) {
            return Err(serde::de::Error::custom("shape fields disagree with rows"));
        }
        Ok(a)
    }
}

/// Kind of a composition: type A, or the row/column parity of a B/C side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CompositionKind {
    A,
    B(Parity),
    C(Parity),
}

/// Weight vector of one side. For B/C the parts are indexed -n..=n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    pub kind: CompositionKind,
    pub parts: Vec<u32>,
}

impl Composition {
    /// Number of steps n (the parts run over 1..=n or -n..=n).
    pub fn rank(&self) -> usize {
        match self.kind {
            CompositionKind::A => self.parts.len(),
            _ => self.parts.len() / 2,
        }
    }

    pub fn part(&self, i: i32) -> u32 {
        let idx = match self.kind {
            CompositionKind::A => i - 1,
            _ => i + self.rank() as i32,
        };
        if idx < 0 {
            0
        } else {
            self.parts.get(idx as usize).copied().unwrap_or(0)
        }
    }
}

fn side_kind(flavor: Flavor, parity: Option<Parity>) -> CompositionKind {
    match (flavor, parity) {
        (Flavor::B(..), Some(p)) => CompositionKind::B(p),
        (Flavor::C(..), Some(p)) => CompositionKind::C(p),
        _ => CompositionKind::A,
    }
}

pub fn row_sums(a: &IndexMatrix) -> Composition {
    Composition {
        kind: side_kind(a.flavor, a.flavor.row_parity()),
        parts: a.rows().map(|i| a.ro(i)).collect(),
    }
}

pub fn col_sums(a: &IndexMatrix) -> Composition {
    Composition {
        kind: side_kind(a.flavor, a.flavor.col_parity()),
        parts: a.cols().map(|j| a.co(j)).collect(),
    }
}

/// a♯_ij: (a00 - 1)/2 at the center, a_ij elsewhere.
pub fn sharp_entry(a: &IndexMatrix, i: i32, j: i32) -> Result<u32, IndexError> {
    if !matches!(a.flavor, Flavor::B(..)) {
        return Err(IndexError::WrongFlavor {
            expected: "B",
            found: a.flavor,
        });
    }
    if (i, j) == (0, 0) {
        let a00 = a.get(0, 0);
        if a00.is_multiple_of(2) {
            return Err(IndexError::Invalid("a00 must be odd".into()));
        }
        Ok((a00 - 1) / 2)
    } else {
        Ok(a.get(i, j))
    }
}

pub fn transpose(a: &IndexMatrix) -> IndexMatrix {
    let mut out = IndexMatrix::blank(a.flavor.transpose(), a.n, a.m, a.d);
    for i in a.rows() {
        for j in a.cols() {
            let o = out.offset(j, i).expect("transposed index in range");
            out.entries[o] = a.get(i, j);
        }
    }
    out
}

/// [A] ↦ [A + E00] from type C labels to type B labels.
pub fn c_shift(a: &IndexMatrix) -> Result<IndexMatrix, IndexError> {
    let Flavor::C(b, c) = a.flavor else {
        return Err(IndexError::WrongFlavor {
            expected: "C",
            found: a.flavor,
        });
    };
    let mut out = a.clone();
    out.flavor = Flavor::B(b, c);
    out = out
        .with_raw_entry(0, 0, 1)
        .ok_or_else(|| IndexError::Invalid("center out of range".into()))?;
    out.validate()?;
    Ok(out)
}

/// Inverse of `c_shift`.
pub fn c_unshift(a: &IndexMatrix) -> Result<IndexMatrix, IndexError> {
    let Flavor::B(b, c) = a.flavor else {
        return Err(IndexError::WrongFlavor {
            expected: "B",
            found: a.flavor,
        });
    };
    let mut out = a
        .with_raw_entry(0, 0, -1)
        .ok_or_else(|| IndexError::Invalid("center entry is zero".into()))?;
    out.flavor = Flavor::C(b, c);
    out.validate()?;
    Ok(out)
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Number of ways to place `units` indistinguishable units in `cells` cells.
fn multiset_count(cells: usize, units: usize) -> u128 {
    if cells == 0 {
        return u128::from(units == 0);
    }
    binomial((cells + units - 1) as u128, units as u128)
}

/// Cells of the fundamental domain (i, j) > (0, 0) that may be nonzero, and
/// the admissible center multiplicities s (center = 2s+1 for B, 2s for C).
fn free_cells(flavor: Flavor, m: usize, n: usize) -> (Vec<(i32, i32)>, bool) {
    let (b, c) = (flavor.row_parity().unwrap(), flavor.col_parity().unwrap());
    let mut cells = Vec::new();
    for i in 0..=m as i32 {
        for j in -(n as i32)..=n as i32 {
            if (i, j) <= (0, 0) {
                continue;
            }
            if i == 0 && b == Parity::Imath {
                continue;
            }
            if j == 0 && c == Parity::Imath {
                continue;
            }
            cells.push((i, j));
        }
    }
    let center_free = b == Parity::Jmath && c == Parity::Jmath;
    (cells, center_free)
}

pub fn count_matrices(flavor: Flavor, m: usize, n: usize, d: usize) -> u128 {
    match flavor {
        Flavor::A => multiset_count(m * n, d),
        _ => {
            let (cells, center_free) = free_cells(flavor, m, n);
            let smax = if center_free { d } else { 0 };
            (0..=smax).map(|s| multiset_count(cells.len(), d - s)).sum()
        }
    }
}

pub fn enumerate_matrices(
    flavor: Flavor,
    m: usize,
    n: usize,
    d: usize,
) -> Result<Vec<IndexMatrix>, IndexError> {
    enumerate_matrices_capped(flavor, m, n, d, DEFAULT_ENUMERATION_CAP)
}

/// All labels of the index set, sorted lexicographically (row-major).
pub fn enumerate_matrices_capped(
    flavor: Flavor,
    m: usize,
    n: usize,
    d: usize,
    cap: u128,
) -> Result<Vec<IndexMatrix>, IndexError> {
    if flavor.is_symmetric()
        && (m == 0 || n == 0)
        && (flavor.row_parity() == Some(Parity::Imath) && m == 0
            || flavor.col_parity() == Some(Parity::Imath) && n == 0)
    {
        return Err(IndexError::EmptyImath);
    }
    let count = count_matrices(flavor, m, n, d);
    if count > cap {
        return Err(IndexError::CapExceeded { count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    match flavor {
        Flavor::A => {
            let cells: Vec<(i32, i32)> = (1..=m as i32)
                .flat_map(|i| (1..=n as i32).map(move |j| (i, j)))
                .collect();
            let base = IndexMatrix::blank(flavor, m, n, d);
            distribute(&base, &cells, 0, d, &mut out);
        }
        Flavor::B(..) | Flavor::C(..) => {
            let is_b = matches!(flavor, Flavor::B(..));
            let (cells, center_free) = free_cells(flavor, m, n);
            let smax = if center_free { d } else { 0 };
            for s in 0..=smax {
                let mut base = IndexMatrix::blank(flavor, m, n, d);
                let center = 2 * s as u32 + u32::from(is_b);
                base.bump(0, 0, center as i32);
                distribute(&base, &cells, 0, d - s, &mut out);
            }
        }
    }
    out.sort();
    debug_assert!(out.iter().all(|a| a.validate().is_ok()));
    Ok(out)
}

fn distribute(
    cur: &IndexMatrix,
    cells: &[(i32, i32)],
    idx: usize,
    left: usize,
    out: &mut Vec<IndexMatrix>,
) {
    if idx == cells.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let (i, j) = cells[idx];
    for k in 0..=left {
        let next = if k == 0 {
            cur.clone()
        } else {
            cur.moved(&[(i, j, k as i32)]).expect("in range")
        };
        distribute(&next, cells, idx + 1, left - k, out);
    }
}

/// Partition as a weakly decreasing list of positive parts.
pub type Partition = Vec<u32>;

/// Partitions of `total` with at most `max_parts` parts, in reverse
/// lexicographic order (largest first part first).
pub fn partitions(total: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(left: u32, max_part: u32, parts_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for p in (1..=max_part.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, max_parts, &mut Vec::new(), &mut out);
    out
}

/// λ = (λ⁺, λ⁻) labelling simple modules of the ı/ȷ quantum groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiPartitionLabel {
    pub plus: Partition,
    pub minus: Partition,
    pub parity: Parity,
    pub rank: usize,
}

impl BiPartitionLabel {
    pub fn size(&self) -> u32 {
        self.plus.iter().sum::<u32>() + self.minus.iter().sum::<u32>()
    }

    /// Part i (1-based) of λ⁺, zero past the end.
    pub fn plus_part(&self, i: usize) -> u32 {
        i.checked_sub(1).and_then(|k| self.plus.get(k)).copied().unwrap_or(0)
    }

    pub fn minus_part(&self, i: usize) -> u32 {
        i.checked_sub(1).and_then(|k| self.minus.get(k)).copied().unwrap_or(0)
    }

    /// Same pair of partitions, regardless of the rank bound.
    pub fn same_shape(&self, other: &BiPartitionLabel) -> bool {
        self.plus == other.plus && self.minus == other.minus && self.parity == other.parity
    }
}

impl fmt::Display for BiPartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Partition| {
            let v: Vec<String> = p.iter().map(u32::to_string).collect();
            format!("({})", v.join(","))
        };
        write!(f, "({},{})", show(&self.plus), show(&self.minus))
    }
}

pub fn enumerate_bipartitions(parity: Parity, n: usize, d: usize) -> Vec<BiPartitionLabel> {
    let plus_parts = match parity {
        Parity::Jmath => n + 1,
        Parity::Imath => n,
    };
    let mut out = Vec::new();
    for l in 0..=d as u32 {
        for plus in partitions(d as u32 - l, plus_parts) {
            for minus in partitions(l, n) {
                out.push(BiPartitionLabel {
                    plus: plus.clone(),
                    minus,
                    parity,
                    rank: n,
                });
            }
        }
    }
    out
}
