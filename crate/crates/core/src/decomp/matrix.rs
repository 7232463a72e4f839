use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::DecompError;
use crate::fock::{apply_symbols, GeneratorExpr, ModuleVector, SpaceDescriptor};
use crate::indexsets::IndexMatrix;
use crate::ring::{LaurentScalar, RationalScalar};

/// Largest basis for which dense matrices are built.
pub const DEFAULT_MATRIX_CAP: usize = 400;

/// Enumerated basis of a space with a label-to-position map.
#[derive(Clone, Debug)]
pub(crate) struct IndexedBasis {
    pub space: SpaceDescriptor,
    pub labels: Vec<IndexMatrix>,
    pub position: HashMap<IndexMatrix, usize>,
}

impl IndexedBasis {
    pub fn new(space: &SpaceDescriptor, cap: usize) -> Result<Self, DecompError> {
        let labels = space.basis()?;
        if labels.len() > cap {
            return Err(DecompError::CapExceeded {
                size: labels.len(),
                cap,
            });
        }
        let position = labels.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        Ok(Self {
            space: *space,
            labels,
            position,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn pos(&self, a: &IndexMatrix) -> Result<usize, DecompError> {
        self.position
            .get(a)
            .copied()
            .ok_or_else(|| DecompError::OutsideBasis(format!("{a:?}")))
    }
}

/// Exact matrix of an operator in the enumerated basis order.
/// Invariant: `entries` is square of side |basis|; column j is the image of
/// basis vector j.
#[derive(Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    pub space: SpaceDescriptor,
    pub label: String,
    entries: Vec<Vec<RationalScalar>>,
}

impl OperatorMatrix {
    pub fn from_entries(space: SpaceDescriptor, label: String, entries: Vec<Vec<RationalScalar>>) -> Self {
        Self { space, label, entries }
    }

    pub fn identity(space: SpaceDescriptor, dim: usize) -> Self {
        let entries = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| if r == c { RationalScalar::one() } else { RationalScalar::zero() })
                    .collect()
            })
            .collect();
        Self::from_entries(space, "1".into(), entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &RationalScalar {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<RationalScalar>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(RationalScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() })
        })
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[RationalScalar]) -> Vec<RationalScalar> {
        self.entries
            .iter()
            .map(|row| {
                let mut acc = RationalScalar::zero();
                for (x, y) in row.iter().zip(v) {
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.add(&x.mul(y));
                    }
                }
                acc
            })
            .collect()
    }

    /// self · other, i.e. other acts first.
    pub fn compose(&self, other: &OperatorMatrix) -> OperatorMatrix {
        let label = format!("({})({})", self.label, other.label);
        Self::from_entries(self.space, label, crate::ring::mat_mul(&self.entries, &other.entries))
    }

    /// self − c·1.
    pub fn shifted(&self, c: &RationalScalar) -> OperatorMatrix {
        let mut entries = self.entries.clone();
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = row[i].sub(c);
        }
        Self::from_entries(self.space, format!("{} - ({c})", self.label), entries)
    }

    /// Entries as Laurent polynomials, when they all are.
    pub fn to_laurent(&self) -> Option<Vec<Vec<LaurentScalar>>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(RationalScalar::to_laurent).collect())
            .collect()
    }

    /// Exponents e_j when the matrix is diag(q^{e_j}).
    pub fn diagonal_exponents(&self) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.dim());
        for (r, row) in self.entries.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                if r != c && !x.is_zero() {
                    return None;
                }
            }
            let l = row[r].to_laurent()?;
            let (c, e) = l.as_monomial()?;
            if *c != 1.into() {
                return None;
            }
            out.push(e);
        }
        Some(out)
    }
}

impl fmt::Debug for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} on {}:", self.label, self.space)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn matrix_in(expr: &GeneratorExpr, basis: &IndexedBasis) -> Result<OperatorMatrix, DecompError> {
    expr.signature()?;
    let n = basis.len();
    let columns: Vec<Vec<RationalScalar>> = basis
        .labels
        .par_iter()
        .map(|a| -> Result<Vec<RationalScalar>, DecompError> {
            let mut col = vec![RationalScalar::zero(); n];
            let v = ModuleVector::basis_vector(a);
            for w in &expr.terms {
                let image = apply_symbols(&w.symbols, &v)?;
                for (t, c) in image.terms() {
                    let slot = &mut col[basis.pos(t)?];
                    *slot = slot.add(&w.coeff.mul_laurent(c));
                }
            }
            Ok(col)
        })
        .collect::<Result<_, _>>()?;
    let entries = (0..n)
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    Ok(OperatorMatrix::from_entries(basis.space, expr.to_string(), entries))
}

/// Matrix of a generator expression on a space; column j is the image of the
/// j-th enumerated basis label.
pub fn operator_matrix(expr: &GeneratorExpr, space: &SpaceDescriptor) -> Result<OperatorMatrix, DecompError> {
    let basis = IndexedBasis::new(space, DEFAULT_MATRIX_CAP)?;
    for g in expr.terms.iter().flat_map(|w| &w.symbols) {
        g.check(space)?;
    }
    matrix_in(expr, &basis)
}
