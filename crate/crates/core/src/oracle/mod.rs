//! Finite-field ground truth: flags over F_p, orbit invariants, convolution
//! counts and interpolated structure constants.

mod convolve;
mod field;
mod flags;
mod interpolate;
mod product;

pub use convolve::{convolve_count, count_between, orbit_representative, structure_counts, FlagCache, DEFAULT_FLAG_CAP};
pub use field::is_prime;
pub use flags::{enumerate_flags, enumerate_flags_of_type, orbit_invariant, FlagKind, FlagRep, OrbitDatum, SubspaceRep};
pub use interpolate::{interpolate_structure_constant, interpolate_with_retry};
pub use product::{
    diagonal_label, refinement_check, schur_image, weighted_count, Calibration, Oracle, Orientation, RawProduct,
    DEFAULT_PRIMES,
};

use thiserror::Error;

use crate::fock::FockError;
use crate::indexsets::IndexError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error("{0} is not a prime greater than 5")]
    BadPrime(u64),
    #[error("flag enumeration exceeds the cap of {0}")]
    CapExceeded(usize),
    #[error("no flag pair realizes {0}")]
    EmptyOrbit(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("interpolation needs {needed} samples, got {have}")]
    InsufficientSamples { needed: usize, have: usize },
    #[error("interpolated coefficients are not integers: {0}")]
    NonIntegral(String),
    #[error("interpolant disagrees with the sample at p = {prime}")]
    VerificationFailed { prime: u64 },
    #[error("calibration failed: {0}")]
    Calibration(String),
}

/// Sample fields must be prime with p > 5.
pub(crate) fn check_prime(p: u64) -> Result<(), OracleError> {
    if p > 5 && is_prime(p) {
        Ok(())
    } else {
        Err(OracleError::BadPrime(p))
    }
}
