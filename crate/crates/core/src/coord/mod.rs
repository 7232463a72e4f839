//! Quantum coordinate algebra of type A and the coordinate coalgebras of
//! type B, with monomial bases, straightening, and the generator actions.

mod actions;
mod coproduct;
mod intertwine;
mod labels;
mod straighten;
mod tensor;
mod word;

pub use actions::{act_coord, act_rescaled, rescale};
pub use coproduct::{act_coproduct, embed_generator, ULetter, UElement};
pub use intertwine::{coproduct_check, intertwiner_check};
pub use labels::{column_word, fd_word, label_from_fd_word, label_from_word, lex_word, words_to_vector};
pub use straighten::{normal_order, reduce_b, Straightener, Strategy};
pub use tensor::{coideal_relation_check, straightening_relation_check, matrix_coefficient};
pub use word::{CoordFlavor, CoordWord, Letter, WordSum};

use thiserror::Error;

use crate::fock::FockError;
use crate::indexsets::IndexError;
use crate::ring::RingError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoordError {
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("letter t[{0},{1}] is out of range")]
    LetterOutOfRange(i32, i32),
    #[error("letter t[{0},{1}] is forbidden for the imath coalgebra")]
    ForbiddenLetter(i32, i32),
    #[error("cannot parse word {0:?}")]
    Parse(String),
    #[error("generator {0} does not act on this coordinate space")]
    Incompatible(String),
    #[error("coefficient {0} is not a Laurent polynomial in the rescaled basis")]
    NonLaurent(String),
    #[error("rescaling exponent is not an integer for {0}")]
    NonIntegralExponent(String),
    #[error("reduction did not terminate within {0} steps")]
    NoTermination(usize),
}
