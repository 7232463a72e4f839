use std::collections::VecDeque;

use rayon::prelude::*;

use super::matrix::{matrix_in, IndexedBasis, DEFAULT_MATRIX_CAP};
use super::DecompError;
use crate::fock::{GeneratorExpr, GeneratorSymbol, Side, SpaceDescriptor};
use crate::ring::{LaurentScalar, RationalScalar, SparseEchelon, SparseRow};

type LMatrix = Vec<Vec<LaurentScalar>>;

fn generator_matrices(basis: &IndexedBasis, side: Side) -> Result<Vec<LMatrix>, DecompError> {
    GeneratorSymbol::all_for(&basis.space, side)
        .iter()
        .map(|g| {
            let m = matrix_in(&GeneratorExpr::symbol(*g), basis)?;
            m.to_laurent()
                .ok_or_else(|| DecompError::OutsideBasis(format!("{g} has a non-Laurent matrix")))
        })
        .collect()
}

/// Dimension of the commutant of the generators on the side opposite to
/// `side`; by the double centralizer property it equals the dimension of
/// the image of the algebra acting on `side`.
pub fn centralizer_dimension(space: &SpaceDescriptor, side: Side) -> Result<usize, DecompError> {
    let basis = IndexedBasis::new(space, DEFAULT_MATRIX_CAP)?;
    let n = basis.len();
    let gens = generator_matrices(&basis, side.opposite())?;
    let var = |r: usize, k: usize| r * n + k;
    // X G − G X = 0, entry (r, c).
    let rows: Vec<SparseRow> = gens
        .par_iter()
        .flat_map_iter(|g| {
            (0..n).flat_map(move |r| {
                (0..n).map(move |c| {
                    let mut row = SparseRow::new();
                    let mut push = |v: usize, x: &LaurentScalar, sign: bool| {
                        let x = RationalScalar::from_laurent(&if sign { x.clone() } else { -x });
                        let e = row.entry(v).or_default();
                        *e = e.add(&x);
                    };
                    for k in 0..n {
                        if !g[k][c].is_zero() {
                            push(var(r, k), &g[k][c], true);
                        }
                        if !g[r][k].is_zero() {
                            push(var(k, c), &g[r][k], false);
                        }
                    }
                    row.retain(|_, x| !x.is_zero());
                    row
                })
            })
        })
        .filter(|row| !row.is_empty())
        .collect();
    let mut ech = SparseEchelon::new(n * n);
    for row in rows {
        ech.insert(row)?;
    }
    Ok(n * n - ech.rank())
}

fn mul(a: &LMatrix, b: &LMatrix) -> LMatrix {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut acc = LaurentScalar::zero();
                    for k in 0..n {
                        if !a[r][k].is_zero() && !b[k][c].is_zero() {
                            acc += &(&a[r][k] * &b[k][c]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn flatten(m: &LMatrix) -> SparseRow {
    m.iter()
        .flatten()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, RationalScalar::from_laurent(x)))
        .collect()
}

/// Dimension over Q(q) of the span of all products of the generator
/// matrices of `side` (the image of the algebra in End of the space).
pub fn image_dimension(space: &SpaceDescriptor, side: Side) -> Result<usize, DecompError> {
    let basis = IndexedBasis::new(space, DEFAULT_MATRIX_CAP)?;
    let n = basis.len();
    let gens = generator_matrices(&basis, side)?;
    let identity: LMatrix = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { LaurentScalar::one() } else { LaurentScalar::zero() })
                .collect()
        })
        .collect();
    let mut ech = SparseEchelon::new(n * n);
    ech.insert(flatten(&identity))?;
    let mut queue = VecDeque::from([identity]);
    while let Some(m) = queue.pop_front() {
        if ech.rank() == n * n {
            break;
        }
        for g in &gens {
            let p = mul(g, &m);
            if ech.insert(flatten(&p))? {
                queue.push_back(p);
            }
        }
    }
    Ok(ech.rank())
}
