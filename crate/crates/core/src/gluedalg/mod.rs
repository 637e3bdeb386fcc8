//! Gluing data realized by bimodules over finite-dimensional algebras.
//!
//! A datum has sites `R_i` (algebras over `F_p`), bimodules `M_ij` and
//! composition maps `ν_ijk : M_ij ⊗ M_jk → M_ik`. The glued category is the
//! module category of the assembled algebra `Γ = ⊕ M_ij` with `e_i Γ e_j =
//! M_ij`. On top of that this module computes the functors `j_k^*`,
//! `j_{k,!}`, `j_{k,*}`, `j_{k,!*}`, simple modules, the lattice `K(Φ)` inside
//! `⊕ K_0(R_i)`, and supports of simples for gluings indexed by a Coxeter
//! group.

pub mod algebra;
pub mod datum;
pub mod functors;
pub mod k0;
pub mod support;

#[cfg(test)]
mod tests;

use thiserror::Error;

use crate::coxeter::CoxeterError;
use crate::exact::ExactError;

pub use algebra::{
    composition_factors, hom_space, is_simple, multiplicities, simple_modules, simples_isomorphic, Algebra,
    Module, SimpleList,
};
pub use datum::{builtin, builtin_names, Bimodule, Composition, GluingAlgebra, GluingDatum, Site, WGluingReport};
pub use functors::{adjunction_check, extend_shriek, extend_star, middle_extension, mu, restrict, AdjunctionReport};
pub use k0::{k0_verify, K0Report};
pub use support::{support_scan, SupportReport};

/// Default prime for the shipped data.
pub const DEFAULT_PRIME: u64 = 101;
/// Largest `dim Γ` for which simple modules are computed by default.
pub const DEFAULT_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlueError {
    #[error("associativity fails on blocks ({i},{j}),({j},{k}),({k},{l})")]
    AssociativityFailure { i: usize, j: usize, k: usize, l: usize },
    #[error("the sum of the site units is not a two-sided unit")]
    UnitFailure,
    #[error("malformed datum: {0}")]
    Shape(String),
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("algebra has dimension {dim}, above the cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("could not split a {dim}-dimensional module over F_{p}; try a larger prime")]
    FieldTooSmall { p: u64, dim: usize },
    #[error("M_{i}{j} is not projective over R_{j}; K_0 needs a derived correction")]
    DerivedCorrectionRequired { i: usize, j: usize },
    #[error("not a W-gluing: {0}")]
    NotWGluing(String),
    #[error("unknown built-in datum `{0}`")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
