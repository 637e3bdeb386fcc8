//! Two-piece gluing test on `V = V₀ ⊕ V₁`.
//!
//! Given `K ⊂ V₀ ⊕ V₁` with sections `i₀, i₁` of its projections, the odd
//! operator `φ` has components `p₁ i₀ : V₀ → V₁` and `p₀ i₁ : V₁ → V₀`. Set
//! `V_φ = (φ² − 1) V`, `K(φ) = {v : φv − v ∈ V_φ}` and
//! `K^h = (K ∩ V₀) ⊕ (K ∩ V₁)`. Then `V_φ ⊂ K^h`, `K(φ) ⊂ K`, and
//! `K = K(φ)` exactly when `V_φ = K^h`.

use crate::exact::{Field, Matrix, Subspace};

use super::KwError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueReport {
    pub dim_k: usize,
    pub dim_v_phi: usize,
    pub dim_k_phi: usize,
    pub dim_k_h: usize,
    pub v_phi_in_k_h: bool,
    pub k_phi_in_k: bool,
    pub k_equals_k_phi: bool,
    pub v_phi_equals_k_h: bool,
}

impl GlueReport {
    /// Both inclusions hold and the two equalities agree.
    pub fn consistent(&self) -> bool {
        self.v_phi_in_k_h && self.k_phi_in_k && self.k_equals_k_phi == self.v_phi_equals_k_h
    }
}

/// `i0` is `(n0 + n1) × n0`, `i1` is `(n0 + n1) × n1`, `k` lives in
/// `V₀ ⊕ V₁` with `V₀` first.
pub fn gluecheck<F: Field>(
    n0: usize,
    n1: usize,
    k: &Subspace<F>,
    i0: &Matrix<F>,
    i1: &Matrix<F>,
) -> Result<GlueReport, KwError> {
    let n = n0 + n1;
    let ctx = k.context().clone();
    if k.ambient() != n || i0.nrows() != n || i0.ncols() != n0 || i1.nrows() != n || i1.ncols() != n1 {
        return Err(KwError::NotASection(format!(
            "shapes: K in {}, i0 {}x{}, i1 {}x{}, expected ambient {n}",
            k.ambient(),
            i0.nrows(),
            i0.ncols(),
            i1.nrows(),
            i1.ncols()
        )));
    }
    let top0: Vec<usize> = (0..n0).collect();
    let top1: Vec<usize> = (n0..n).collect();
    if i0.select_rows(&top0) != Matrix::identity(&ctx, n0) || !i0.image().is_subspace_of(k)? {
        return Err(KwError::NotASection("i0".into()));
    }
    if i1.select_rows(&top1) != Matrix::identity(&ctx, n1) || !i1.image().is_subspace_of(k)? {
        return Err(KwError::NotASection("i1".into()));
    }
    let mut phi = Matrix::zeros(&ctx, n, n);
    phi.set_block(0, n0, &i1.select_rows(&top0));
    phi.set_block(n0, 0, &i0.select_rows(&top1));
    let id = Matrix::identity(&ctx, n);
    let v_phi = phi.mul(&phi).sub(&id).image();
    let k_phi = v_phi.preimage_under(&phi.sub(&id))?;
    let mut e0 = Matrix::zeros(&ctx, n, n0);
    e0.set_block(0, 0, &Matrix::identity(&ctx, n0));
    let mut e1 = Matrix::zeros(&ctx, n, n1);
    e1.set_block(n0, 0, &Matrix::identity(&ctx, n1));
    let k_h = k.intersect(&e0.image())?.sum(&k.intersect(&e1.image())?)?;
    Ok(GlueReport {
        dim_k: k.dim(),
        dim_v_phi: v_phi.dim(),
        dim_k_phi: k_phi.dim(),
        dim_k_h: k_h.dim(),
        v_phi_in_k_h: v_phi.is_subspace_of(&k_h)?,
        k_phi_in_k: k_phi.is_subspace_of(k)?,
        k_equals_k_phi: &k_phi == k,
        v_phi_equals_k_h: v_phi == k_h,
    })
}

/// `K(φ)` for an honest odd operator given by `a : V₀ → V₁` and
/// `b : V₁ → V₀`, with the sections `v₀ ↦ (v₀, a v₀)` and `v₁ ↦ (b v₁, v₁)`.
pub fn graph_instance<F: Field>(
    a: &Matrix<F>,
    b: &Matrix<F>,
) -> Result<(Subspace<F>, Matrix<F>, Matrix<F>), KwError> {
    let (n0, n1) = (a.ncols(), a.nrows());
    let ctx = a.context().clone();
    let n = n0 + n1;
    let mut i0 = Matrix::zeros(&ctx, n, n0);
    i0.set_block(0, 0, &Matrix::identity(&ctx, n0));
    i0.set_block(n0, 0, a);
    let mut i1 = Matrix::zeros(&ctx, n, n1);
    i1.set_block(0, 0, b);
    i1.set_block(n0, 0, &Matrix::identity(&ctx, n1));
    let mut phi = Matrix::zeros(&ctx, n, n);
    phi.set_block(0, n0, b);
    phi.set_block(n0, 0, a);
    let id = Matrix::identity(&ctx, n);
    let v_phi = phi.mul(&phi).sub(&id).image();
    let k = v_phi.preimage_under(&phi.sub(&id))?;
    Ok((k, i0, i1))
}
