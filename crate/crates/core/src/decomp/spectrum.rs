use rayon::prelude::*;
use serde::Serialize;

use super::DecompError;
use crate::fock::{apply_generator, GenFamily, GenKind, GeneratorSymbol, ModuleVector, Side, SpaceDescriptor};
use crate::ring::quantum_integer;

/// Outcome of the t_0 spectral check on one side of a space.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SpectrumReport {
    pub space: String,
    pub side: Side,
    /// k + 1 for the factors t_0 − [k+1], −d ≤ k ≤ d.
    pub factors: Vec<i64>,
    /// Whether the full product annihilates every basis vector.
    pub annihilates: bool,
    /// The n with t_0 − [n] a factor of the minimal polynomial.
    pub eigenvalues: Vec<i64>,
    /// Whether the product over `eigenvalues` alone annihilates; the factors
    /// are pairwise distinct, so this certifies a squarefree minimal
    /// polynomial and hence semisimplicity.
    pub squarefree: bool,
    pub pass: bool,
}

fn product_kills(t0: &GeneratorSymbol, basis: &[ModuleVector], factors: &[i64]) -> Result<bool, DecompError> {
    let results: Vec<bool> = basis
        .par_iter()
        .map(|v| -> Result<bool, DecompError> {
            let mut cur = v.clone();
            for &n in factors {
                if cur.is_zero() {
                    break;
                }
                let tv = apply_generator(t0, &cur)?;
                cur = tv.sub(&cur.scale(&quantum_integer(n)));
            }
            Ok(cur.is_zero())
        })
        .collect::<Result<_, _>>()?;
    Ok(results.into_iter().all(|b| b))
}

/// Checks ∏_{k=−d}^{d} (t_0 − [k+1]) = 0 on the ı side of a space, and finds
/// which factors the minimal polynomial actually uses.
pub fn verify_t0_spectrum(space: &SpaceDescriptor, side: Side) -> Result<SpectrumReport, DecompError> {
    if GeneratorSymbol::family_for(space, side) != GenFamily::Imath {
        return Err(DecompError::NoTElement(format!("{side} side of {space}")));
    }
    let t0 = GeneratorSymbol::new(side, GenFamily::Imath, GenKind::T0, 0);
    t0.check(space)?;
    let basis: Vec<ModuleVector> = space.basis()?.iter().map(ModuleVector::basis_vector).collect();
    let d = space.d as i64;
    let factors: Vec<i64> = (-d..=d).map(|k| k + 1).collect();
    let annihilates = product_kills(&t0, &basis, &factors)?;
    let mut eigenvalues = Vec::new();
    for &n in &factors {
        let others: Vec<i64> = factors.iter().copied().filter(|&x| x != n).collect();
        if !product_kills(&t0, &basis, &others)? {
            eigenvalues.push(n);
        }
    }
    let squarefree = annihilates && product_kills(&t0, &basis, &eigenvalues)?;
    Ok(SpectrumReport {
        space: space.to_string(),
        side,
        factors,
        annihilates,
        eigenvalues,
        squarefree,
        pass: annihilates && squarefree,
    })
}
