//! Exact computations for categories glued along finite Coxeter groups.
//!
//! - [`exact`]: rationals, `F_p`, Laurent polynomials, rational functions,
//!   matrices, subspaces and integer lattices, all exact.
//! - [`coxeter`]: finite Coxeter groups in ShortLex form, cosets, half-sets,
//!   geodesics and convexity.
//! - [`braidrep`]: representations of generalized braid groups, Hecke
//!   algebra models, induction from parabolic subgroups.
//! - [`kwglue`]: the spaces `V_w`, `K_W(V)`, goodness, the canonical-complex
//!   identities and the pairing `χ`.
//! - [`simplicial`]: coefficient systems on a simplex and their chain
//!   complexes.
//! - [`gluedalg`]: gluing data over `F_p`, the glued algebra, its simple
//!   modules, `K_0` and supports.
//! - [`counterexample`]: the determinant obstruction to `M E = p_G · I`.
//! - [`cli`]: the `coxglue` command-line front end.

pub mod exact;
pub mod coxeter;
pub mod braidrep;
pub mod kwglue;
pub mod simplicial;
pub mod gluedalg;
pub mod counterexample;
pub mod cli;
