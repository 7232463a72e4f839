use std::collections::BTreeMap;

use super::rational::RationalScalar;
use super::RingError;

pub type SparseRow = BTreeMap<usize, RationalScalar>;

/// Incrementally maintained reduced row-echelon form over Q(q).
/// Invariant: each stored row has coefficient 1 at its pivot and 0 at every
/// other pivot column.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseRow> {
        self.rows.get(&pivot)
    }

    /// Adds a row; returns true when it increased the rank.
    pub fn insert(&mut self, mut row: SparseRow) -> Result<bool, RingError> {
        row.retain(|_, v| !v.is_zero());
        if let Some((&c, _)) = row.iter().next_back() {
            if c >= self.ncols {
                return Err(RingError::DimensionMismatch {
                    expected: self.ncols,
                    found: c + 1,
                });
            }
        }
        let hits: Vec<usize> = row
            .keys()
            .copied()
            .filter(|c| self.rows.contains_key(c))
            .collect();
        for p in hits {
            let Some(f) = row.get(&p).cloned() else {
                continue;
            };
            let prow = &self.rows[&p];
            axpy(&mut row, &f.neg(), prow);
        }
        let Some((&pivot, lead)) = row.iter().next() else {
            return Ok(false);
        };
        let inv = lead.inv()?;
        for v in row.values_mut() {
            *v = v.mul(&inv);
        }
        for other in self.rows.values_mut() {
            if let Some(f) = other.get(&pivot).cloned() {
                axpy(other, &f.neg(), &row);
            }
        }
        self.rows.insert(pivot, row);
        Ok(true)
    }

    /// Basis of {x : M x = 0}, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<RationalScalar>> {
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.rows.contains_key(c)) {
            let mut v = vec![RationalScalar::zero(); self.ncols];
            v[free] = RationalScalar::one();
            for (&p, r) in &self.rows {
                if let Some(x) = r.get(&free) {
                    v[p] = x.neg();
                }
            }
            out.push(v);
        }
        out
    }
}

fn axpy(target: &mut SparseRow, f: &RationalScalar, src: &SparseRow) {
    for (c, v) in src {
        let delta = f.mul(v);
        let entry = target.entry(*c).or_default();
        *entry = entry.add(&delta);
        if entry.is_zero() {
            target.remove(c);
        }
    }
}

/// Solution space of a linear system A x = b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub rank: usize,
    pub solvable: bool,
    pub particular: Option<Vec<RationalScalar>>,
    pub kernel: Vec<Vec<RationalScalar>>,
}

pub fn solve_linear(
    system: &[Vec<RationalScalar>],
    rhs: &[RationalScalar],
) -> Result<LinearSolution, RingError> {
    if system.len() != rhs.len() {
        return Err(RingError::DimensionMismatch {
            expected: system.len(),
            found: rhs.len(),
        });
    }
    let ncols = system.first().map_or(0, |r| r.len());
    let mut ech = SparseEchelon::new(ncols + 1);
    for (r, b) in system.iter().zip(rhs) {
        if r.len() != ncols {
            return Err(RingError::DimensionMismatch {
                expected: ncols,
                found: r.len(),
            });
        }
        let mut row: SparseRow = r
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        if !b.is_zero() {
            row.insert(ncols, b.clone());
        }
        ech.insert(row)?;
    }
    let solvable = ech.row(ncols).is_none();
    let rank = ech.rank() - usize::from(!solvable);
    let particular = solvable.then(|| {
        let mut x = vec![RationalScalar::zero(); ncols];
        for p in ech.pivots() {
            if let Some(v) = ech.row(p).unwrap().get(&ncols) {
                x[p] = v.clone();
            }
        }
        x
    });
    let mut homog = SparseEchelon::new(ncols);
    for p in ech.pivots().filter(|&p| p < ncols) {
        let mut row = ech.row(p).unwrap().clone();
        row.remove(&ncols);
        homog.insert(row)?;
    }
    Ok(LinearSolution {
        rank,
        solvable,
        particular,
        kernel: homog.kernel_basis(),
    })
}

/// Dense matrix product over Q(q).
pub fn mat_mul(a: &[Vec<RationalScalar>], b: &[Vec<RationalScalar>]) -> Vec<Vec<RationalScalar>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = RationalScalar::zero();
                    for k in 0..inner {
                        if row[k].is_zero() || b[k][j].is_zero() {
                            continue;
                        }
                        acc = acc.add(&row[k].mul(&b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Rank of a dense matrix.
pub fn rank(m: &[Vec<RationalScalar>]) -> Result<usize, RingError> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut ech = SparseEchelon::new(ncols);
    for r in m {
        ech.insert(
            r.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
        )?;
    }
    Ok(ech.rank())
}
