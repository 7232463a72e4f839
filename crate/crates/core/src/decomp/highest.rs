use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::matrix::{matrix_in, IndexedBasis, OperatorMatrix, DEFAULT_MATRIX_CAP};
use super::telement::t_elements;
use super::DecompError;
use crate::fock::{GenFamily, GenKind, GeneratorExpr, GeneratorSymbol, Side, SpaceDescriptor};
use crate::indexsets::IndexMatrix;
use crate::ring::{quantum_integer, LaurentScalar, RationalScalar, SparseEchelon, SparseRow};

/// Highest weight data of one side: exponents a_i with d_i v = q^{a_i} v and
/// the eigenvalues of t_0, t_1, … (empty for U_q(gl)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideWeight {
    pub side: Side,
    pub family: GenFamily,
    pub rank: usize,
    pub d_weights: Vec<i64>,
    pub t_eigenvalues: Vec<RationalScalar>,
}

/// A joint eigenspace of the d's and t's inside the kernel of the raising
/// operators of the chosen sides. Invariant: every vector is annihilated by
/// the raising generators (E_i / e_i on the left, F_i / f_i on the right) and
/// is an eigenvector of each d and t with the stated eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightDatum {
    pub space: SpaceDescriptor,
    pub weights: Vec<SideWeight>,
    /// Basis of the eigenspace, as nonzero coordinates on basis labels.
    pub vectors: Vec<Vec<(IndexMatrix, RationalScalar)>>,
}

impl HighestWeightDatum {
    pub fn multiplicity(&self) -> usize {
        self.vectors.len()
    }

    pub fn side(&self, side: Side) -> Option<&SideWeight> {
        self.weights.iter().find(|w| w.side == side)
    }
}

/// Matrices of one side needed for highest weight computations.
pub(crate) struct SideOperators {
    pub side: Side,
    pub family: GenFamily,
    pub rank: usize,
    /// Per basis position, the exponents of the d's.
    pub weights: Vec<Vec<i64>>,
    pub raising: Vec<OperatorMatrix>,
    pub t: Vec<OperatorMatrix>,
}

impl SideOperators {
    pub fn new(basis: &IndexedBasis, side: Side) -> Result<Self, DecompError> {
        let space = basis.space;
        let family = GeneratorSymbol::family_for(&space, side);
        let rank = GeneratorSymbol::side_rank(&space, side);
        let gens = GeneratorSymbol::all_for(&space, side);
        let raise_kind = match side {
            Side::Left => GenKind::E,
            Side::Right => GenKind::F,
        };
        let mut weights = vec![Vec::new(); basis.len()];
        for g in gens.iter().filter(|g| g.kind == GenKind::D) {
            let m = matrix_in(&GeneratorExpr::symbol(*g), basis)?;
            let exps = m
                .diagonal_exponents()
                .ok_or_else(|| DecompError::OutsideBasis(format!("{g} is not diagonal")))?;
            for (w, e) in weights.iter_mut().zip(exps) {
                w.push(e);
            }
        }
        let raising = gens
            .iter()
            .filter(|g| g.kind == raise_kind)
            .map(|g| matrix_in(&GeneratorExpr::symbol(*g), basis))
            .collect::<Result<_, _>>()?;
        let t = match family {
            GenFamily::A => Vec::new(),
            _ => t_elements(side, family, rank)?
                .iter()
                .map(|e| matrix_in(e, basis))
                .collect::<Result<_, _>>()?,
        };
        Ok(Self {
            side,
            family,
            rank,
            weights,
            raising,
            t,
        })
    }
}

/// Kernel of the stacked raising operators restricted to the columns `cols`,
/// as dense vectors.
fn raising_kernel(ops: &[&SideOperators], cols: &[usize], dim: usize) -> Result<Vec<Vec<RationalScalar>>, DecompError> {
    let mut ech = SparseEchelon::new(cols.len());
    for op in ops {
        for m in &op.raising {
            for row in m.rows() {
                let r: SparseRow = cols
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| !row[c].is_zero())
                    .map(|(k, &c)| (k, row[c].clone()))
                    .collect();
                if !r.is_empty() {
                    ech.insert(r)?;
                }
            }
        }
    }
    Ok(ech
        .kernel_basis()
        .into_iter()
        .map(|x| {
            let mut v = vec![RationalScalar::zero(); dim];
            for (k, &c) in cols.iter().enumerate() {
                v[c] = x[k].clone();
            }
            v
        })
        .collect())
}

/// Vectors y in span(basis) with T y = c y.
fn eigen_in_span(
    images: &[Vec<RationalScalar>],
    span: &[Vec<RationalScalar>],
    c: &RationalScalar,
) -> Result<Vec<Vec<RationalScalar>>, DecompError> {
    let dim = span.first().map_or(0, Vec::len);
    let mut ech = SparseEchelon::new(span.len());
    for r in 0..dim {
        let row: SparseRow = (0..span.len())
            .filter_map(|k| {
                let x = images[k][r].sub(&c.mul(&span[k][r]));
                (!x.is_zero()).then_some((k, x))
            })
            .collect();
        if !row.is_empty() {
            ech.insert(row)?;
        }
    }
    Ok(ech
        .kernel_basis()
        .into_iter()
        .map(|x| {
            let mut y = vec![RationalScalar::zero(); dim];
            for (k, xk) in x.iter().enumerate() {
                if xk.is_zero() {
                    continue;
                }
                for (yr, s) in y.iter_mut().zip(&span[k]) {
                    if !s.is_zero() {
                        *yr = yr.add(&xk.mul(s));
                    }
                }
            }
            y
        })
        .collect())
}

/// Candidate t-eigenvalues [k] for |k| ≤ 2d + 2.
fn candidates(d: usize) -> Vec<RationalScalar> {
    let bound = 2 * d as i64 + 2;
    (-bound..=bound)
        .rev()
        .map(|k| RationalScalar::from_laurent(&quantum_integer(k)))
        .collect()
}

struct Piece {
    vectors: Vec<Vec<RationalScalar>>,
    t: Vec<Vec<RationalScalar>>,
}

/// Splits a piece into the eigenspaces of T it contains. Vectors of the
/// piece that are not T-eigenvectors are dropped: a highest weight vector
/// must be an eigenvector of every t_i, and the raising kernel of a weight
/// space need not be t-stable.
fn split_piece(piece: &Piece, side_slot: usize, t: &OperatorMatrix, cands: &[RationalScalar]) -> Result<Vec<Piece>, DecompError> {
    let images: Vec<Vec<RationalScalar>> = piece.vectors.iter().map(|v| t.apply(v)).collect();
    let mut out = Vec::new();
    for c in cands {
        let vecs = eigen_in_span(&images, &piece.vectors, c)?;
        if vecs.is_empty() {
            continue;
        }
        let mut tt = piece.t.clone();
        tt[side_slot].push(c.clone());
        out.push(Piece { vectors: vecs, t: tt });
    }
    Ok(out)
}

pub(crate) fn pieces_with(
    basis: &IndexedBasis,
    ops: &[&SideOperators],
) -> Result<Vec<HighestWeightDatum>, DecompError> {
    let dim = basis.len();
    let mut groups: BTreeMap<Vec<Vec<i64>>, Vec<usize>> = BTreeMap::new();
    for pos in 0..dim {
        let key: Vec<Vec<i64>> = ops.iter().map(|o| o.weights[pos].clone()).collect();
        groups.entry(key).or_default().push(pos);
    }
    let cands = candidates(basis.space.d);
    let mut out = Vec::new();
    for (key, cols) in groups.iter().rev() {
        let kernel = raising_kernel(ops, cols, dim)?;
        if kernel.is_empty() {
            continue;
        }
        let mut pieces = vec![Piece {
            vectors: kernel,
            t: vec![Vec::new(); ops.len()],
        }];
        for (slot, op) in ops.iter().enumerate() {
            for t in &op.t {
                let mut next = Vec::new();
                for p in &pieces {
                    next.extend(split_piece(p, slot, t, &cands)?);
                }
                pieces = next;
            }
        }
        for p in pieces {
            let weights = ops
                .iter()
                .zip(key)
                .zip(&p.t)
                .map(|((op, w), t)| SideWeight {
                    side: op.side,
                    family: op.family,
                    rank: op.rank,
                    d_weights: w.clone(),
                    t_eigenvalues: t.clone(),
                })
                .collect();
            let vectors = p
                .vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(i, x)| (basis.labels[i].clone(), x.clone()))
                        .collect()
                })
                .collect();
            out.push(HighestWeightDatum {
                space: basis.space,
                weights,
                vectors,
            });
        }
    }
    Ok(out)
}

/// Joint highest weight pieces for the given sides: simultaneous kernels of
/// the raising operators of every listed side, split into joint eigenspaces
/// of the d's and t's.
pub fn highest_weight_pieces(space: &SpaceDescriptor, sides: &[Side]) -> Result<Vec<HighestWeightDatum>, DecompError> {
    let basis = IndexedBasis::new(space, DEFAULT_MATRIX_CAP)?;
    let ops: Vec<SideOperators> = sides
        .iter()
        .map(|&s| SideOperators::new(&basis, s))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&SideOperators> = ops.iter().collect();
    pieces_with(&basis, &refs)
}

/// Highest weight lines of one side; each datum's multiplicity is the
/// dimension of its eigenspace.
pub fn joint_highest_weight_vectors(space: &SpaceDescriptor, side: Side) -> Result<Vec<HighestWeightDatum>, DecompError> {
    highest_weight_pieces(space, &[side])
}

fn part(p: &[u32], i: usize) -> i64 {
    i.checked_sub(1).and_then(|k| p.get(k)).map_or(0, |&x| i64::from(x))
}

/// Convention for the t-eigenvalues attached to a label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TConvention {
    /// ȷ: t_{j−1} ↦ [λ⁺_{j+1} − λ⁻_j]; ı: t_{j−1} ↦ [d + λ⁺_j − λ⁻_j].
    Printed,
    /// ȷ: t_{j−1} ↦ [λ⁻_j − λ⁺_{j+1}]; ı: t_{j−1} ↦ [1 + λ⁺_j − λ⁻_j].
    /// These are the eigenvalues the Fock spaces realize; the ı values lie in
    /// the t_0 spectrum {[k+1] : |k| ≤ d}.
    Observed,
}

/// The highest weight attached to (λ⁺, λ⁻): d-exponents and t-eigenvalues.
/// U_q(gl_r): (λ_1, …, λ_r). ȷ: (λ⁺_1, λ⁺_2+λ⁻_1, …, λ⁺_{r+1}+λ⁻_r).
/// ı: (λ⁺_1+λ⁻_1, …, λ⁺_r+λ⁻_r).
pub fn prescribed_weights(
    family: GenFamily,
    rank: usize,
    d: usize,
    plus: &[u32],
    minus: &[u32],
    convention: TConvention,
) -> (Vec<i64>, Vec<LaurentScalar>) {
    let d = d as i64;
    match family {
        GenFamily::A => ((1..=rank).map(|i| part(plus, i)).collect(), Vec::new()),
        GenFamily::Jmath => {
            let mut a = vec![part(plus, 1)];
            a.extend((1..=rank).map(|j| part(plus, j + 1) + part(minus, j)));
            let sign = match convention {
                TConvention::Printed => 1,
                TConvention::Observed => -1,
            };
            let b = (1..=rank)
                .map(|j| quantum_integer(sign * (part(plus, j + 1) - part(minus, j))))
                .collect();
            (a, b)
        }
        GenFamily::Imath => {
            let a = (1..=rank).map(|j| part(plus, j) + part(minus, j)).collect();
            let offset = match convention {
                TConvention::Printed => d,
                TConvention::Observed => 1,
            };
            let b = (1..=rank)
                .map(|j| quantum_integer(offset + part(plus, j) - part(minus, j)))
                .collect();
            (a, b)
        }
    }
}

fn to_partition(v: &[BigRational]) -> Option<Vec<u32>> {
    let mut out = Vec::new();
    for x in v {
        if !x.is_integer() || x.is_negative() {
            return None;
        }
        out.push(x.to_integer().to_u32()?);
    }
    if out.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

/// Reads (λ⁺, λ⁻) off a measured highest weight through its q → 1
/// specialization, inverting `prescribed_weights`; None when the result is
/// not a pair of partitions.
pub fn specialize_label(weight: &SideWeight, convention: TConvention) -> Option<(Vec<u32>, Vec<u32>)> {
    let a: Vec<BigRational> = weight
        .d_weights
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect();
    if weight.family == GenFamily::A {
        return Some((to_partition(&a)?, Vec::new()));
    }
    let r = weight.rank;
    if weight.t_eigenvalues.len() != r {
        return None;
    }
    let b: Vec<BigRational> = weight
        .t_eigenvalues
        .iter()
        .map(RationalScalar::eval_at_one)
        .collect::<Option<_>>()?;
    let two = BigRational::from_integer(2.into());
    let (plus, minus): (Vec<BigRational>, Vec<BigRational>) = match (weight.family, convention) {
        (GenFamily::Jmath, c) => {
            // b_{j−1}(1) = ±(λ⁺_{j+1} − λ⁻_j) and a_j = λ⁺_{j+1} + λ⁻_j.
            let b: Vec<BigRational> = match c {
                TConvention::Printed => b,
                TConvention::Observed => b.into_iter().map(|x| -x).collect(),
            };
            let mut plus = vec![a[0].clone()];
            plus.extend((1..=r).map(|j| (&a[j] + &b[j - 1]) / &two));
            let minus = (1..=r).map(|j| (&a[j] - &b[j - 1]) / &two).collect();
            (plus, minus)
        }
        (_, c) => {
            // b_{j−1}(1) = offset + λ⁺_j − λ⁻_j and a_j = λ⁺_j + λ⁻_j.
            let offset = match c {
                TConvention::Printed => a.iter().cloned().sum(),
                TConvention::Observed => BigRational::from_integer(1.into()),
            };
            let plus = (0..r).map(|j| (&a[j] + &b[j] - &offset) / &two).collect();
            let minus = (0..r).map(|j| (&a[j] - &b[j] + &offset) / &two).collect();
            (plus, minus)
        }
    };
    Some((to_partition(&plus)?, to_partition(&minus)?))
}

/// Whether a measured highest weight equals the one prescribed for
/// (λ⁺, λ⁻), t-eigenvalues included.
pub fn match_label(weight: &SideWeight, d: usize, plus: &[u32], minus: &[u32], convention: TConvention) -> bool {
    let (a, b) = prescribed_weights(weight.family, weight.rank, d, plus, minus, convention);
    a == weight.d_weights
        && b.len() == weight.t_eigenvalues.len()
        && b.iter()
            .zip(&weight.t_eigenvalues)
            .all(|(x, y)| RationalScalar::from_laurent(x) == *y)
}
