//! Representation-theoretic checks over Q(q): operator matrices, highest
//! weight pieces, t-elements and their spectra, commutants, and the
//! multiplicity-free decomposition of the Fock spaces.

mod centralizer;
mod highest;
mod matrix;
mod spectrum;
mod telement;
mod verify;
mod weyl;

pub use centralizer::{centralizer_dimension, image_dimension};
pub use highest::{
    highest_weight_pieces, joint_highest_weight_vectors, match_label, prescribed_weights, specialize_label,
    HighestWeightDatum, SideWeight, TConvention,
};
pub use matrix::{operator_matrix, OperatorMatrix, DEFAULT_MATRIX_CAP};
pub use spectrum::{verify_t0_spectrum, SpectrumReport};
pub use telement::{braid_automorphism, build_t_element, t_elements};
pub use verify::{
    expected_labels, verify_decomposition, verify_double_centralizer, CentralizerReport, DecompositionChecks,
    DecompositionReport, Evidence, Label, SummandReport,
};
pub use weyl::{classical_dimension, label_dimension};

use thiserror::Error;

use crate::fock::FockError;
use crate::indexsets::IndexError;
use crate::ring::RingError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("space of dimension {size} is above the matrix cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("label {0} is not dominant")]
    NonDominant(String),
    #[error("t-element index {index} out of range for rank {rank}")]
    TIndex { index: usize, rank: usize },
    #[error("{0} has no t-elements")]
    NoTElement(String),
    #[error("generator image left the enumerated basis at {0}")]
    OutsideBasis(String),
    #[error("dimension overflow in {0}")]
    Overflow(String),
}
