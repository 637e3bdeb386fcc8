//! The pairing `χ` between `K_W(V)` and `K_W(V*)`.
//!
//! On the sources of the surjections `⊕_y V → K_W(V)` and
//! `⊕_y V* → K_W(V*)` the form is
//! `χ̃((v_y), (v′_y)) = Σ_{y,w} ⟨v_w, τ*(w y⁻¹) v′_y⟩`, where `τ*` comes from
//! the supplied dual. It descends to a well-defined form on `K_W` exactly
//! when the kernels of both surjections are orthogonal to everything.
//!
//! For `τ*(x) = τ(x⁻¹)ᵀ`, which is what [`BraidRepresentation::transpose_rep`]
//! produces, the descended form satisfies
//! `χ(i_y v, v′) = ⟨v, p_y v′⟩` and `χ(v, i_y v′) = ⟨p_y v, v′⟩`.

use crate::braidrep::BraidRepresentation;
use crate::exact::{Field, Matrix};

use super::{kw_space, same_system, sections_matrix, KwError};

#[derive(Clone, Debug)]
pub struct ChiReport<F: Field> {
    /// `χ(b_a, b′_c)` on the echelon bases of `K_W(V)` and `K_W(V*)`.
    pub gram: Matrix<F>,
    /// Kernels of both surjections pair to zero with everything.
    pub descends: bool,
    /// `χ(i_y v, v′) = ⟨v, p_y v′⟩` on basis vectors.
    pub left_adjunction: bool,
    /// `χ(v, i_y v′) = ⟨p_y v, v′⟩` on basis vectors.
    pub right_adjunction: bool,
    pub nonsingular: bool,
}

impl<F: Field> ChiReport<F> {
    pub fn ok(&self) -> bool {
        self.descends && self.left_adjunction && self.right_adjunction && self.nonsingular
    }
}

pub fn chi_pairing<F: Field>(
    rep: &BraidRepresentation<F>,
    dual: &BraidRepresentation<F>,
) -> Result<ChiReport<F>, KwError> {
    same_system(rep, dual)?;
    let sys = rep.system();
    let ctx = rep.context();
    let d = rep.dim();
    let n = sys.order() * d;

    let kw = kw_space(rep);
    let kw_dual = kw_space(dual);
    let pi = sections_matrix(rep);
    let pi_dual = sections_matrix(dual);
    if pi.rank() != kw.dim() {
        return Err(KwError::NotGood("primal"));
    }
    if pi_dual.rank() != kw_dual.dim() {
        return Err(KwError::NotGood("dual"));
    }

    let mut x = Matrix::zeros(ctx, n, n);
    for w in sys.elements() {
        for y in sys.elements() {
            let t = dual.tau(sys.mul(w, sys.inv(y)));
            x.set_block(w.index() * d, y.index() * d, t);
        }
    }

    let basis = kw.space.basis().transpose();
    let basis_dual = kw_dual.space.basis().transpose();
    let lift = pi.solve_matrix(&basis)?.expect("basis lies in the image");
    let lift_dual = pi_dual.solve_matrix(&basis_dual)?.expect("basis lies in the image");

    let gram = lift.transpose().mul(&x).mul(&lift_dual);

    let descends = pi
        .kernel_basis()
        .iter()
        .all(|z| x.transpose().mul_vec(z).iter().all(|c| c.is_zero()))
        && pi_dual
            .kernel_basis()
            .iter()
            .all(|z| x.mul_vec(z).iter().all(|c| c.is_zero()));

    // i_y e_k lifts to the unit vector at (y, k), so χ(i_y e_k, b′_c) is an
    // entry of X · lift_dual.
    let left = x.mul(&lift_dual);
    let left_adjunction = (0..n).all(|r| (0..basis_dual.ncols()).all(|c| left.get(r, c) == basis_dual.get(r, c)));
    let right = lift.transpose().mul(&x);
    let right_adjunction =
        (0..basis.ncols()).all(|a| (0..n).all(|c| right.get(a, c) == basis.get(c, a)));

    let nonsingular = gram.is_square() && (gram.nrows() == 0 || gram.is_invertible());
    Ok(ChiReport {
        gram,
        descends,
        left_adjunction,
        right_adjunction,
        nonsingular,
    })
}
