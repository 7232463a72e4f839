use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::OracleError;
use crate::ring::IntPoly;

/// Integer polynomial P of degree ≤ `degree_bound` with P(p) = count at every
/// sample. The first degree_bound + 1 samples determine P; the rest verify it.
pub fn interpolate_structure_constant(counts: &[(u64, u64)], degree_bound: usize) -> Result<IntPoly, OracleError> {
    if counts.len() < degree_bound + 2 {
        return Err(OracleError::InsufficientSamples {
            needed: degree_bound + 2,
            have: counts.len(),
        });
    }
    let pts = &counts[..=degree_bound];
    // Lagrange: Σ_i y_i Π_{j≠i} (x - x_j)/(x_i - x_j), expanded into coefficients.
    let mut coeffs = vec![BigRational::zero(); degree_bound + 1];
    for (i, &(xi, yi)) in pts.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, &(xj, _)) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj = BigRational::from_integer(BigInt::from(xj));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xj;
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xi)) - xj;
        }
        let scale = BigRational::from_integer(BigInt::from(yi)) / denom;
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    if coeffs.iter().any(|c| !c.is_integer()) {
        return Err(OracleError::NonIntegral(format!("{coeffs:?}")));
    }
    let poly = IntPoly::from_coeffs(coeffs.iter().map(|c| c.to_integer()).collect());
    for &(x, y) in &counts[degree_bound + 1..] {
        if poly.eval(&BigInt::from(x)) != BigInt::from(y) {
            return Err(OracleError::VerificationFailed { prime: x });
        }
    }
    Ok(poly)
}

/// Interpolates with the bound doubled on failure, up to what the samples allow.
pub fn interpolate_with_retry(counts: &[(u64, u64)], initial_bound: usize) -> Result<IntPoly, OracleError> {
    let max_bound = counts.len().saturating_sub(2);
    let mut bound = initial_bound.clamp(0, max_bound);
    loop {
        match interpolate_structure_constant(counts, bound) {
            Ok(p) => return Ok(p),
            Err(OracleError::NonIntegral(_) | OracleError::VerificationFailed { .. }) if bound < max_bound => {
                bound = (bound * 2).clamp(1, max_bound);
            }
            Err(e) => return Err(e),
        }
    }
}
