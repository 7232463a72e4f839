//! Exact coefficient arithmetic: Z[q, q^-1], Q(q) and linear algebra over Q(q).

mod laurent;
mod linalg;
mod poly;
mod rational;

pub use laurent::{bar, quantum_double_factorial, quantum_factorial, quantum_integer, LaurentScalar};
pub use linalg::{mat_mul, rank, solve_linear, LinearSolution, SparseEchelon, SparseRow};
pub use poly::IntPoly;
pub use rational::RationalScalar;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("cannot parse Laurent polynomial from {0:?}")]
    Parse(String),
    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("double factorial requires an even argument, got {0}")]
    OddDoubleFactorial(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
