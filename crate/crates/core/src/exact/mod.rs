//! Exact scalars and linear algebra.
//!
//! Everything here is exact: rationals are arbitrary precision, polynomial
//! determinants are fraction free, and integer lattices are kept in Hermite
//! normal form.

pub mod fp;
pub mod lattice;
pub mod laurent;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod ring;
pub mod scalar;
pub mod subspace;

pub use fp::Fp;
pub use lattice::IntegerLattice;
pub use laurent::{reduce_mod, LaurentPoly, Residue};
pub use matrix::Matrix;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::{q, qf, Q};
pub use ring::{ExactDiv, Field, Ring};
pub use scalar::{ExactScalar, FieldKind};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("reduction modulo the zero polynomial")]
    ZeroModulus,
    #[error("u is not invertible modulo the given polynomial")]
    UnitObstruction,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("{op}: expected length {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("ambient dimensions differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("entry {0} is not an integer")]
    NonInteger(String),
    #[error("scalar kinds differ: {0}")]
    KindMismatch(String),
    #[error("cannot parse `{input}`: {msg}")]
    Parse { input: String, msg: String },
}
