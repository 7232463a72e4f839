//! Fock spaces on Θ/Ξ labels with the normalized basis [A] and the left and
//! right generator actions.

mod actions;
mod checks;
mod generators;
mod vector;

pub use actions::{act_on_basis, apply_expr, apply_generator, apply_symbols, apply_word, normalization_exponent};
pub use checks::{check_c_intertwining, check_commuting_actions, check_relations, CheckReport};
pub use generators::{GenFamily, GenKind, GeneratorExpr, GeneratorSymbol, GeneratorWord, Side};
pub use vector::{ModuleVector, SpaceDescriptor};

use thiserror::Error;

use crate::indexsets::IndexError;
use crate::ring::RingError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("generator {symbol} does not act on {space}")]
    FamilyMismatch { symbol: String, space: String },
    #[error("generator index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("word mixes sides or families")]
    MixedWord,
    #[error("word coefficient {0} is not a Laurent polynomial")]
    NonLaurentCoefficient(String),
    #[error("normalization exponent is not an integer for {0}")]
    NonIntegralExponent(String),
    #[error("cannot parse generator {0:?}")]
    Parse(String),
}
