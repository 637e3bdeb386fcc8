//! Restriction to a site and the three extensions from it.
//!
//! For an `R_k`-module `A`:
//! - `j_k^* V = e_k V`;
//! - `j_{k,!} A = Γe_k ⊗_{R_k} A`, whose site components are `M_ik ⊗ A`;
//! - `j_{k,*} A = Hom_{R_k}(e_kΓ, A)` with `(γf)(x) = f(xγ)`;
//! - `μ : j_{k,!} A → j_{k,*} A`, `γ ⊗ a ↦ (x ↦ (xγ)a)`, and
//!   `j_{k,!*} A = im μ`.

use crate::exact::{Fp, Matrix, Ring, Subspace};

use super::algebra::{hom_space, intertwiners, tensor_relations, Algebra, Module};
use super::datum::GluingAlgebra;

/// `e_k V` as an `R_k`-module.
pub fn restrict(ga: &GluingAlgebra, m: &Module, k: usize) -> Module {
    let u = m.act(&ga.idempotent(k)).image();
    let actions: Vec<Matrix<Fp>> = ga.block(k, k).map(|g| m.action(g).clone()).collect();
    Module::new(m.prime(), m.dim(), actions).submodule(&u)
}

struct Shriek {
    module: Module,
    pidx: Vec<usize>,
    rels: Subspace<Fp>,
}

fn shriek_parts(ga: &GluingAlgebra, k: usize, a: &Module) -> Shriek {
    let p = ga.prime();
    let pidx = ga.column_indices(k);
    let rk: Vec<usize> = ga.block(k, k).collect();
    let (np, da) = (pidx.len(), a.dim());
    let right: Vec<Matrix<Fp>> = rk
        .iter()
        .map(|&b| ga.restricted_product(&pidx, &[b], &pidx))
        .collect();
    let rels = tensor_relations(p, &right, a.actions(), np, da);
    let id = Matrix::identity(&p, da);
    let actions = (0..ga.dim())
        .map(|g| ga.restricted_product(&[g], &pidx, &pidx).kron(&id))
        .collect();
    let module = Module::new(p, np * da, actions).quotient(&rels);
    Shriek { module, pidx, rels }
}

struct Star {
    module: Module,
    eidx: Vec<usize>,
    hom: Subspace<Fp>,
}

fn star_parts(ga: &GluingAlgebra, k: usize, a: &Module) -> Star {
    let p = ga.prime();
    let eidx = ga.row_indices(k);
    let rk: Vec<usize> = ga.block(k, k).collect();
    let (ne, da) = (eidx.len(), a.dim());
    let left: Vec<Matrix<Fp>> = rk
        .iter()
        .map(|&b| ga.restricted_product(&[b], &eidx, &eidx))
        .collect();
    let ms: Vec<&Matrix<Fp>> = left.iter().collect();
    let ns: Vec<&Matrix<Fp>> = a.actions().iter().collect();
    let hom = Subspace::span(&p, da * ne, intertwiners(p, &ms, &ns, ne, da));
    let id = Matrix::identity(&p, da);
    let actions = (0..ga.dim())
        .map(|g| id.kron(&ga.restricted_product(&eidx, &[g], &eidx).transpose()))
        .collect();
    let module = Module::new(p, da * ne, actions).submodule(&hom);
    Star { module, eidx, hom }
}

pub fn extend_shriek(ga: &GluingAlgebra, k: usize, a: &Module) -> Module {
    shriek_parts(ga, k, a).module
}

pub fn extend_star(ga: &GluingAlgebra, k: usize, a: &Module) -> Module {
    star_parts(ga, k, a).module
}

fn free_columns(sub: &Subspace<Fp>) -> Vec<usize> {
    let mut is_pivot = vec![false; sub.ambient()];
    for &c in sub.pivots() {
        is_pivot[c] = true;
    }
    (0..sub.ambient()).filter(|&c| !is_pivot[c]).collect()
}

fn mu_parts(ga: &GluingAlgebra, k: usize, a: &Module, sh: &Shriek, st: &Star) -> Matrix<Fp> {
    let p = ga.prime();
    let rk: Vec<usize> = ga.block(k, k).collect();
    let (np, ne, da) = (sh.pidx.len(), st.eidx.len(), a.dim());
    // (e, x) ↦ e·x ∈ R_k for e ∈ e_kΓ, x ∈ Γe_k.
    let pairing = ga.restricted_product(&st.eidx, &sh.pidx, &rk);
    let mut big = Matrix::zeros(&p, da * ne, np * da);
    for e in 0..ne {
        for x in 0..np {
            let act = a.act(&pairing.col(e * np + x));
            for y in 0..da {
                for r in 0..da {
                    big.set(r * ne + e, x * da + y, act.get(r, y).clone());
                }
            }
        }
    }
    big.select_cols(&free_columns(&sh.rels)).select_rows(st.hom.pivots())
}

/// Matrix of `μ` from the coordinates of [`extend_shriek`] to those of
/// [`extend_star`].
pub fn mu(ga: &GluingAlgebra, k: usize, a: &Module) -> Matrix<Fp> {
    let sh = shriek_parts(ga, k, a);
    let st = star_parts(ga, k, a);
    mu_parts(ga, k, a, &sh, &st)
}

/// `im(μ)` as a submodule of `j_{k,*} A`.
pub fn middle_extension(ga: &GluingAlgebra, k: usize, a: &Module) -> Module {
    let sh = shriek_parts(ga, k, a);
    let st = star_parts(ga, k, a);
    let m = mu_parts(ga, k, a, &sh, &st);
    st.module.submodule(&m.image())
}

/// Adjunctions and unit maps for one site `k`, one `R_k`-module `A` and one
/// `Γ`-module `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionReport {
    /// `dim Hom_Γ(j_! A, B)` and `dim Hom_{R_k}(A, j^* B)`.
    pub shriek: (usize, usize),
    /// `dim Hom_Γ(B, j_* A)` and `dim Hom_{R_k}(j^* B, A)`.
    pub star: (usize, usize),
    /// `a ↦ e_k ⊗ a` is an `R_k`-isomorphism `A → j^* j_! A`.
    pub shriek_unit_iso: bool,
    /// `f ↦ f(e_k)` is an `R_k`-isomorphism `j^* j_* A → A`.
    pub star_counit_iso: bool,
    /// `j^* μ` is the identity of `A` under the two maps above.
    pub mu_restricts_to_identity: bool,
}

impl AdjunctionReport {
    pub fn ok(&self) -> bool {
        self.shriek.0 == self.shriek.1
            && self.star.0 == self.star.1
            && self.shriek_unit_iso
            && self.star_counit_iso
            && self.mu_restricts_to_identity
    }
}

pub fn adjunction_check(ga: &GluingAlgebra, k: usize, a: &Module, b: &Module) -> AdjunctionReport {
    let p = ga.prime();
    let gamma: &Algebra = ga.algebra();
    let rk_alg = ga.site(k);
    let rk: Vec<usize> = ga.block(k, k).collect();
    let sh = shriek_parts(ga, k, a);
    let st = star_parts(ga, k, a);
    let jb = restrict(ga, b, k);
    let da = a.dim();
    let ek_full = ga.idempotent(k);

    let shriek = (
        hom_space(gamma, &sh.module, b).len(),
        hom_space(rk_alg, a, &jb).len(),
    );
    let star = (
        hom_space(gamma, b, &st.module).len(),
        hom_space(rk_alg, &jb, a).len(),
    );

    // a_y ↦ e_k ⊗ a_y in quotient coordinates.
    let np = sh.pidx.len();
    let q = sh.rels.quotient_matrix();
    let mut unit = Matrix::zeros(&p, sh.module.dim(), da);
    for y in 0..da {
        let mut v = vec![Fp::zero(&p); np * da];
        for (x, &g) in sh.pidx.iter().enumerate() {
            v[x * da + y] = ek_full[g].clone();
        }
        for (r, c) in q.mul_vec(&v).into_iter().enumerate() {
            unit.set(r, y, c);
        }
    }
    let ek_on_shriek = sh.module.act(&ek_full);
    let linear = |m: &Module, map: &Matrix<Fp>, forward: bool| {
        rk.iter().enumerate().all(|(bi, &g)| {
            if forward {
                m.action(g).mul(map) == map.mul(a.action(bi))
            } else {
                a.action(bi).mul(map) == map.mul(m.action(g))
            }
        })
    };
    let shriek_unit_iso = unit.rank() == da
        && ek_on_shriek.rank() == da
        && unit.image().is_subspace_of(&ek_on_shriek.image()).unwrap_or(false)
        && linear(&sh.module, &unit, true);

    // f ↦ f(e_k) from coordinates on the Hom space.
    let ne = st.eidx.len();
    let basis = st.hom.basis_vectors();
    let mut counit = Matrix::zeros(&p, da, st.module.dim());
    for (c, f) in basis.iter().enumerate() {
        for r in 0..da {
            let mut s = Fp::zero(&p);
            for (x, &g) in st.eidx.iter().enumerate() {
                s = s.add(&ek_full[g].mul(&f[r * ne + x]));
            }
            counit.set(r, c, s);
        }
    }
    let ek_on_star = st.module.act(&ek_full);
    let star_counit_iso =
        ek_on_star.rank() == da && counit.mul(&ek_on_star).rank() == da && linear(&st.module, &counit, false);

    let m = mu_parts(ga, k, a, &sh, &st);
    let mu_restricts_to_identity = counit.mul(&m).mul(&unit) == Matrix::identity(&p, da);

    AdjunctionReport {
        shriek,
        star,
        shriek_unit_iso,
        star_counit_iso,
        mu_restricts_to_identity,
    }
}
