use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::DecompError;
use crate::fock::GenFamily;

/// Weyl dimension of a highest weight module of gl_{k₁} ⊕ gl_{k₂} ⊕ ⋯, one
/// weakly decreasing weight per factor.
pub fn classical_dimension(factors: &[Vec<i64>]) -> Result<u64, DecompError> {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for lambda in factors {
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(DecompError::NonDominant(format!("{lambda:?}")));
        }
        for i in 0..lambda.len() {
            for j in i + 1..lambda.len() {
                num *= lambda[i] - lambda[j] + (j - i) as i64;
                den *= (j - i) as i64;
            }
        }
    }
    if !(&num % &den).is_zero() {
        return Err(DecompError::Overflow("non-integral Weyl quotient".into()));
    }
    (num / den)
        .to_u64()
        .ok_or_else(|| DecompError::Overflow("Weyl dimension".into()))
}

fn padded(parts: &[u32], len: usize) -> Result<Vec<i64>, DecompError> {
    if parts.len() > len {
        return Err(DecompError::NonDominant(format!("{parts:?} has more than {len} parts")));
    }
    let mut v: Vec<i64> = parts.iter().map(|&p| i64::from(p)).collect();
    v.resize(len, 0);
    Ok(v)
}

/// Classical dimension of the simple module labelled by (λ⁺, λ⁻) for the
/// algebra that U_q(gl_r) (λ⁻ empty), U^ȷ_r or U^ı_r specializes to:
/// gl_r, gl_{r+1} ⊕ gl_r, gl_r ⊕ gl_r.
pub fn label_dimension(family: GenFamily, rank: usize, plus: &[u32], minus: &[u32]) -> Result<u64, DecompError> {
    let factors = match family {
        GenFamily::A => {
            if !minus.is_empty() {
                return Err(DecompError::NonDominant("type A label with a negative part".into()));
            }
            vec![padded(plus, rank)?]
        }
        GenFamily::Jmath => vec![padded(plus, rank + 1)?, padded(minus, rank)?],
        GenFamily::Imath => vec![padded(plus, rank)?, padded(minus, rank)?],
    };
    classical_dimension(&factors)
}
