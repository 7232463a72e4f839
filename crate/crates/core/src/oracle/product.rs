use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::convolve::{structure_counts, FlagCache};
use super::flags::FlagKind;
use super::interpolate::interpolate_with_retry;
use super::OracleError;
use crate::fock::{
    apply_generator, normalization_exponent, CheckReport, GenFamily, GenKind, GeneratorSymbol, ModuleVector, Side,
    SpaceDescriptor,
};
use crate::indexsets::{col_sums, row_sums, Composition, Flavor, IndexMatrix};
use crate::ring::{IntPoly, LaurentScalar};

pub const DEFAULT_PRIMES: [u64; 10] = [7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// The substitution of the abstract field-size variable x by a power of q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// x ↦ q^-2
    InverseSquare,
    /// x ↦ q^2
    Square,
}

impl Orientation {
    pub const ALL: [Orientation; 2] = [Orientation::InverseSquare, Orientation::Square];

    fn step(self) -> i64 {
        match self {
            Orientation::InverseSquare => -2,
            Orientation::Square => 2,
        }
    }

    pub fn substitute(self, poly: &IntPoly) -> LaurentScalar {
        LaurentScalar::from_terms(
            poly.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (self.step() * k as i64, c.clone())),
        )
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::InverseSquare => "q^-2",
            Orientation::Square => "q^2",
        })
    }
}

impl FromStr for Orientation {
    type Err = OracleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "q^-2" => Ok(Orientation::InverseSquare),
            "q^2" => Ok(Orientation::Square),
            other => Err(OracleError::Mismatch(format!("unknown orientation {other:?}"))),
        }
    }
}

/// χ-basis structure polynomials of one product, before normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawProduct {
    pub left: IndexMatrix,
    pub right: IndexMatrix,
    pub polys: BTreeMap<IndexMatrix, IntPoly>,
}

impl RawProduct {
    /// [A][B] = Σ_C q^{e(A)+e(B)-e(C)} κ_C [C].
    pub fn assemble(&self, orientation: Orientation) -> Result<ModuleVector, OracleError> {
        let space = SpaceDescriptor::new(
            FlagKind::pair_flavor(FlagKind::row_kind(self.left.flavor()), FlagKind::col_kind(self.right.flavor()))?,
            self.left.m(),
            self.right.n(),
            self.left.d(),
        );
        let base = normalization_exponent(&self.left)? + normalization_exponent(&self.right)?;
        let mut out = ModuleVector::zero(space);
        for (c, poly) in &self.polys {
            let coeff = orientation.substitute(poly).shift(base - normalization_exponent(c)?);
            out.add_term(c.clone(), &coeff);
        }
        Ok(out)
    }
}

/// Finite-field convolution engine over a fixed list of sample primes.
pub struct Oracle {
    primes: Vec<u64>,
    degree_bound: Option<usize>,
    cache: FlagCache,
}

impl Oracle {
    pub fn new(primes: &[u64]) -> Result<Self, OracleError> {
        for &p in primes {
            super::check_prime(p)?;
        }
        Ok(Self {
            primes: primes.to_vec(),
            degree_bound: None,
            cache: FlagCache::default(),
        })
    }

    pub fn with_degree_bound(mut self, bound: usize) -> Self {
        self.degree_bound = Some(bound);
        self
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn cache(&self) -> &FlagCache {
        &self.cache
    }

    /// Counts at every sample prime, interpolated label by label.
    pub fn raw_product(&self, a: &IndexMatrix, b: &IndexMatrix) -> Result<RawProduct, OracleError> {
        let per_prime: Vec<BTreeMap<IndexMatrix, u64>> = self
            .primes
            .par_iter()
            .map(|&p| structure_counts(a, b, p, &self.cache))
            .collect::<Result<_, _>>()?;
        let bound = self.degree_bound.unwrap_or((a.d() * a.d()).max(1));
        let mut polys = BTreeMap::new();
        for c in per_prime[0].keys() {
            let samples: Vec<(u64, u64)> = self.primes.iter().zip(&per_prime).map(|(&p, m)| (p, m[c])).collect();
            let poly = interpolate_with_retry(&samples, bound)?;
            if !poly.is_zero() {
                polys.insert(c.clone(), poly);
            }
        }
        Ok(RawProduct {
            left: a.clone(),
            right: b.clone(),
            polys,
        })
    }

    pub fn product(&self, a: &IndexMatrix, b: &IndexMatrix, orientation: Orientation) -> Result<ModuleVector, OracleError> {
        self.raw_product(a, b)?.assemble(orientation)
    }

    /// The products realizing generator `g` on the basis vector [a]: left
    /// generators multiply from the left, right generators from the right.
    pub fn raw_generator_action(&self, g: &GeneratorSymbol, a: &IndexMatrix) -> Result<Vec<(LaurentScalar, RawProduct)>, OracleError> {
        let mut out = Vec::new();
        for (coeff, elem) in schur_image(g, a)? {
            let raw = match g.side {
                Side::Left => self.raw_product(&elem, a)?,
                Side::Right => self.raw_product(a, &elem)?,
            };
            out.push((coeff, raw));
        }
        Ok(out)
    }

    pub fn generator_action(&self, g: &GeneratorSymbol, a: &IndexMatrix, orientation: Orientation) -> Result<ModuleVector, OracleError> {
        assemble_action(a, &self.raw_generator_action(g, a)?, orientation)
    }

    /// Compares every generator product on `space` with the closed formulas.
    /// Returns one report per orientation.
    pub fn compare_generators(&self, space: &SpaceDescriptor) -> Result<Vec<(Orientation, CheckReport)>, OracleError> {
        let basis = space.basis()?;
        let mut gens = GeneratorSymbol::all_for(space, Side::Left);
        gens.extend(GeneratorSymbol::all_for(space, Side::Right));
        let mut reports: Vec<(Orientation, CheckReport)> = Orientation::ALL
            .iter()
            .map(|&o| (o, CheckReport::new(&format!("oracle products ({o})"), space)))
            .collect();
        for a in &basis {
            for g in &gens {
                let raw = self.raw_generator_action(g, a)?;
                let expected = apply_generator(g, &ModuleVector::basis_vector(a))?;
                for (o, report) in reports.iter_mut() {
                    let got = assemble_action(a, &raw, *o)?;
                    report.record(got == expected, || {
                        format!("{g} on {a}: oracle {} vs formula {}", got.pretty("[A]"), expected.pretty("[A]"))
                    });
                }
            }
        }
        Ok(reports)
    }

    /// Fixes the orientation from all generator products on T_{2|2,2}.
    pub fn calibrate(&self) -> Result<Calibration, OracleError> {
        let space = SpaceDescriptor::new(Flavor::A, 2, 2, 2);
        let reports = self.compare_generators(&space)?;
        let passing: Vec<&(Orientation, CheckReport)> = reports.iter().filter(|(_, r)| r.pass()).collect();
        match passing.as_slice() {
            [(o, r)] => Ok(Calibration {
                orientation: *o,
                space: space.to_string(),
                checked: r.checked,
                primes: self.primes.clone(),
            }),
            [] => Err(OracleError::Calibration("no orientation reproduces the generator products".into())),
            _ => Err(OracleError::Calibration("both orientations agree; calibration is ambiguous".into())),
        }
    }
}

/// Outcome of calibration, persisted by front ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Calibration {
    pub orientation: Orientation,
    pub space: String,
    pub checked: usize,
    pub primes: Vec<u64>,
}

fn assemble_action(a: &IndexMatrix, parts: &[(LaurentScalar, RawProduct)], orientation: Orientation) -> Result<ModuleVector, OracleError> {
    let mut out = ModuleVector::zero(SpaceDescriptor::of(a));
    for (coeff, raw) in parts {
        out.add_scaled(&raw.assemble(orientation)?, coeff);
    }
    Ok(out)
}

/// The diagonal label with the given weight on its diagonal.
pub fn diagonal_label(flavor: Flavor, weight: &Composition) -> Result<IndexMatrix, OracleError> {
    let k = weight.parts.len();
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|r| (0..k).map(|s| if r == s { weight.parts[r] } else { 0 }).collect())
        .collect();
    Ok(IndexMatrix::from_rows(flavor, &rows)?)
}

fn diag_exponent(family: GenFamily, w: &Composition, j: i32) -> i64 {
    let ro = |i: i32| w.part(i) as i64;
    match (family, j) {
        (GenFamily::Jmath, 0) => (ro(0) - 1) / 2,
        _ => ro(j),
    }
}

/// Terms c·[B] of the Schur-algebra image of `g` that can act nonzero on [a]
/// (matching weight on the contracted side). Empty when g kills [a].
pub fn schur_image(g: &GeneratorSymbol, a: &IndexMatrix) -> Result<Vec<(LaurentScalar, IndexMatrix)>, OracleError> {
    g.check(&SpaceDescriptor::of(a))?;
    let (kind, weight) = match g.side {
        Side::Left => (FlagKind::row_kind(a.flavor()), row_sums(a)),
        Side::Right => (FlagKind::col_kind(a.flavor()), col_sums(a)),
    };
    let diag = diagonal_label(kind.square_flavor(), &weight)?;
    let i = g.index;
    let one = LaurentScalar::one();
    let left = g.side == Side::Left;
    let mut out = Vec::new();
    let mut push = |m: Option<IndexMatrix>, c: LaurentScalar| {
        if let Some(b) = m {
            if b.validate().is_ok() {
                out.push((c, b));
            }
        }
    };
    match g.kind {
        GenKind::E => {
            let fix = if left { i + 1 } else { i };
            push(diag.moved(&[(i, i + 1, 1), (fix, fix, -1)]), one);
        }
        GenKind::F => {
            let fix = if left { i } else { i + 1 };
            push(diag.moved(&[(i + 1, i, 1), (fix, fix, -1)]), one);
        }
        GenKind::T0 => {
            push(diag.moved(&[(1, -1, 1), (1, 1, -1)]), one);
            let c = LaurentScalar::q_pow(weight.part(1) as i64);
            push(Some(diag.clone()), c);
        }
        GenKind::D | GenKind::DInv => {
            let e = diag_exponent(g.family, &weight, i);
            let e = if g.kind == GenKind::D { e } else { -e };
            push(Some(diag.clone()), LaurentScalar::q_pow(e));
        }
        GenKind::K | GenKind::KInv => {
            let lead = if g.family == GenFamily::Jmath && i == 0 { 2 } else { 1 };
            let e = lead * diag_exponent(g.family, &weight, i) - diag_exponent(g.family, &weight, i + 1);
            let e = if g.kind == GenKind::K { e } else { -e };
            push(Some(diag.clone()), LaurentScalar::q_pow(e));
        }
    }
    Ok(out)
}

/// Refinement identity for type A: with ξ' the label pairing a flag with its
/// refinement along `blocks`, κ_{ξ,ξ',C} = 1 when merging the columns of C
/// along `blocks` gives ξ and 0 otherwise, at every sample prime.
pub fn refinement_check(oracle: &Oracle, xi: &IndexMatrix, fine: &[u32], blocks: &[usize]) -> Result<CheckReport, OracleError> {
    if xi.flavor() != Flavor::A || blocks.len() != xi.n() || blocks.iter().sum::<usize>() != fine.len() {
        return Err(OracleError::Mismatch("refinement data does not fit the label".into()));
    }
    let mut refine_rows = vec![vec![0u32; fine.len()]; blocks.len()];
    let mut start = 0;
    for (r, &len) in blocks.iter().enumerate() {
        refine_rows[r][start..start + len].copy_from_slice(&fine[start..start + len]);
        start += len;
    }
    let refine = IndexMatrix::from_rows(Flavor::A, &refine_rows)?;
    if col_sums(xi) != row_sums(&refine) {
        return Err(OracleError::Mismatch("fine composition does not refine the column sums".into()));
    }
    let space = SpaceDescriptor::new(Flavor::A, xi.m(), fine.len(), xi.d());
    let mut report = CheckReport::new("refinement identity", &space);
    for &p in oracle.primes() {
        for (c, count) in structure_counts(xi, &refine, p, oracle.cache())? {
            let merged = merge_columns(&c, blocks)?;
            let expected = u64::from(merged == *xi);
            report.record(count == expected, || format!("p={p}, C={c}: count {count}, expected {expected}"));
        }
    }
    Ok(report)
}

fn merge_columns(c: &IndexMatrix, blocks: &[usize]) -> Result<IndexMatrix, OracleError> {
    let rows: Vec<Vec<u32>> = c
        .rows_vec()
        .iter()
        .map(|row| {
            let mut start = 0;
            blocks
                .iter()
                .map(|&len| {
                    let s = row[start..start + len].iter().sum();
                    start += len;
                    s
                })
                .collect()
        })
        .collect();
    Ok(IndexMatrix::from_rows(Flavor::A, &rows)?)
}

/// Σ over third labels of count × orbit size, for the counting identity.
pub fn weighted_count(counts: &BTreeMap<IndexMatrix, u64>, orbit_sizes: &BTreeMap<IndexMatrix, u64>) -> BigInt {
    counts
        .iter()
        .map(|(c, &k)| BigInt::from(k) * BigInt::from(orbit_sizes.get(c).copied().unwrap_or(0)))
        .sum()
}
