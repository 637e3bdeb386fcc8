//! The space `K_W(V)` of compatible tuples attached to a braid group
//! representation, its section maps and the identities they satisfy.
//!
//! Tuples `(x_w)_{w ∈ W}` are stored flat: coordinate `k` of `x_w` sits at
//! `w.index() * dim + k`. The defining conditions are
//! `x_{s̄w} − ρ(s) x_w ∈ V_s` with `V_s = (ρ(s)² − 1) V`.

mod chi;
mod gluecheck;

pub use chi::{chi_pairing, ChiReport};
pub use gluecheck::{gluecheck, graph_instance, GlueReport};

use thiserror::Error;

use crate::braidrep::{pure_braid_generators, BraidError, BraidRepresentation};
use crate::coxeter::{genset_members, CoxeterSystem, GenSet, GroupElement, Side};
use crate::exact::{ExactError, Field, Matrix, Subspace};

/// Reduced words checked per element by [`v_w`].
pub const DEFAULT_WORD_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KwError {
    #[error("V_w depends on the reduced word for {0}")]
    WellDefinednessFailure(String),
    #[error("{0} representation is not good")]
    NotGood(&'static str),
    #[error("not a section: {0}")]
    NotASection(String),
    #[error("representations do not match: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// `V_s = im(ρ(s)² − 1)`.
pub fn v_s<F: Field>(rep: &BraidRepresentation<F>, s: usize) -> Subspace<F> {
    let g = rep.gen(s);
    g.mul(g).sub(&rep.identity()).image()
}

fn v_along<F: Field>(rep: &BraidRepresentation<F>, word: &[usize]) -> Result<Subspace<F>, KwError> {
    let mut acc = Subspace::zero(rep.context(), rep.dim());
    let mut prefix = rep.identity();
    for &s in word {
        acc = acc.sum(&v_s(rep, s).image_under(&prefix)?)?;
        prefix = prefix.mul(rep.gen(s));
    }
    Ok(acc)
}

/// `V_w = Σ_j τ(a_1⋯a_{j−1}) V_{a_j}` along a reduced word `a_1⋯a_k` of
/// `w`, recomputed along up to `limit` reduced words which must all agree.
pub fn v_w<F: Field>(
    rep: &BraidRepresentation<F>,
    w: GroupElement,
    limit: usize,
) -> Result<Subspace<F>, KwError> {
    let sys = rep.system();
    let first = v_along(rep, &sys.normal_form(w))?;
    for word in sys.reduced_words(w, Some(limit)) {
        if v_along(rep, &word)? != first {
            return Err(KwError::WellDefinednessFailure(sys.format_element(w)));
        }
    }
    Ok(first)
}

/// `V_{w₀}` against `Σ_p (ρ(p) − 1) V` over the pure braid generators.
pub fn augmentation_check<F: Field>(rep: &BraidRepresentation<F>) -> Result<bool, KwError> {
    let sys = rep.system();
    let lhs = v_w(rep, sys.w0(), DEFAULT_WORD_LIMIT)?;
    let id = rep.identity();
    let mut rhs = Subspace::zero(rep.context(), rep.dim());
    for p in pure_braid_generators(sys) {
        rhs = rhs.sum(&rep.act(&p)?.sub(&id).image())?;
    }
    Ok(lhs == rhs)
}

/// `K_W(V)` with the data needed to map in and out of it.
#[derive(Clone, Debug)]
pub struct KWSpace<F: Field> {
    pub space: Subspace<F>,
    pub order: usize,
    pub dim: usize,
}

impl<F: Field> KWSpace<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient(&self) -> usize {
        self.order * self.dim
    }

    pub fn contains(&self, v: &[F]) -> Result<bool, ExactError> {
        self.space.contains(v)
    }

    /// Coordinate `w` of a flat tuple.
    pub fn component<'a>(&self, v: &'a [F], w: GroupElement) -> &'a [F] {
        &v[w.index() * self.dim..(w.index() + 1) * self.dim]
    }
}

/// Tuples indexed by `elements` satisfying the conditions for every
/// generator in `gens` and every pair `w, s̄w` both in `elements`.
fn compatible_tuples<F: Field>(
    rep: &BraidRepresentation<F>,
    elements: &[GroupElement],
    gens: &[usize],
) -> Subspace<F> {
    let sys = rep.system();
    let d = rep.dim();
    let ctx = rep.context();
    let mut slot = vec![usize::MAX; sys.order()];
    for (k, w) in elements.iter().enumerate() {
        slot[w.index()] = k;
    }
    let n = elements.len() * d;
    let mut blocks = Vec::new();
    for &s in gens {
        let q = v_s(rep, s).quotient_matrix();
        if q.nrows() == 0 {
            continue;
        }
        let qs = q.mul(rep.gen(s)).neg();
        for (k, &w) in elements.iter().enumerate() {
            let t = slot[sys.gen_mul(s, w).index()];
            if t == usize::MAX {
                continue;
            }
            let mut row = Matrix::zeros(ctx, q.nrows(), n);
            row.set_block(0, t * d, &q);
            let cur = row.block(0, k * d, q.nrows(), d).add(&qs);
            row.set_block(0, k * d, &cur);
            blocks.push(row);
        }
    }
    if blocks.is_empty() {
        return Subspace::full(ctx, n);
    }
    Matrix::vstack_all(ctx, n, &blocks).kernel()
}

pub fn kw_space<F: Field>(rep: &BraidRepresentation<F>) -> KWSpace<F> {
    let sys = rep.system();
    let elements: Vec<GroupElement> = sys.elements().collect();
    let gens: Vec<usize> = (0..sys.rank()).collect();
    KWSpace {
        space: compatible_tuples(rep, &elements, &gens),
        order: sys.order(),
        dim: rep.dim(),
    }
}

/// `i_y : V → K_W(V)`, `v ↦ (τ(w y⁻¹) v)_w`, as an `|W|·d × d` matrix.
pub fn section_i<F: Field>(rep: &BraidRepresentation<F>, y: GroupElement) -> Matrix<F> {
    let sys = rep.system();
    let d = rep.dim();
    let yi = sys.inv(y);
    let mut m = Matrix::zeros(rep.context(), sys.order() * d, d);
    for w in sys.elements() {
        m.set_block(w.index() * d, 0, rep.tau(sys.mul(w, yi)));
    }
    m
}

/// `p_y : K_W(V) → V`, the coordinate at `y`.
pub fn p_y<F: Field>(rep: &BraidRepresentation<F>, y: GroupElement) -> Matrix<F> {
    let d = rep.dim();
    let mut m = Matrix::zeros(rep.context(), d, rep.system().order() * d);
    m.set_block(0, y.index() * d, &rep.identity());
    m
}

/// The space `K_{W_J x}` of tuples on a right coset, with the conditions for
/// generators in `J`. Tuples are ordered like `elements`.
#[derive(Clone, Debug)]
pub struct CosetSpace<F: Field> {
    pub j: GenSet,
    pub elements: Vec<GroupElement>,
    pub space: Subspace<F>,
}

pub fn coset_space<F: Field>(rep: &BraidRepresentation<F>, j: GenSet, x: GroupElement) -> CosetSpace<F> {
    let sys = rep.system();
    let elements = sys.right_coset(j, x);
    let gens = genset_members(j, sys.rank());
    let space = compatible_tuples(rep, &elements, &gens);
    CosetSpace { j, elements, space }
}

/// `i_{W_J x}`: the `w`-coordinate of the image is `τ(n(w)) v_{p(w)}` where
/// `p(w)` is the point of the coset closest to `w` and `w = n(w) p(w)`.
pub fn coset_section<F: Field>(rep: &BraidRepresentation<F>, coset: &CosetSpace<F>) -> Matrix<F> {
    let sys = rep.system();
    let d = rep.dim();
    let x = coset.elements[0];
    let mut slot = vec![usize::MAX; sys.order()];
    for (k, w) in coset.elements.iter().enumerate() {
        slot[w.index()] = k;
    }
    let mut m = Matrix::zeros(rep.context(), sys.order() * d, coset.elements.len() * d);
    for w in sys.elements() {
        let cp = sys.coset_pointer(coset.j, x, w);
        m.set_block(w.index() * d, slot[cp.p.index()] * d, rep.tau(cp.n));
    }
    m
}

/// `p_{W_J x}`: the coordinates on the coset.
pub fn coset_projection<F: Field>(rep: &BraidRepresentation<F>, coset: &CosetSpace<F>) -> Matrix<F> {
    let d = rep.dim();
    let mut m = Matrix::zeros(rep.context(), coset.elements.len() * d, rep.system().order() * d);
    for (k, w) in coset.elements.iter().enumerate() {
        m.set_block(k * d, w.index() * d, &rep.identity());
    }
    m
}

/// `i_{W_J x} ∘ p_{W_J x}` as an operator on `V^W`, built blockwise.
fn coset_composite_into<F: Field>(
    rep: &BraidRepresentation<F>,
    j: GenSet,
    coset: &[GroupElement],
    rows: &[GroupElement],
    sign: bool,
    acc: &mut Matrix<F>,
) {
    let sys = rep.system();
    let d = rep.dim();
    for &w in rows {
        let cp = sys.coset_pointer(j, coset[0], w);
        let t = rep.tau(cp.n);
        let (r0, c0) = (w.index() * d, cp.p.index() * d);
        let cur = acc.block(r0, c0, d, d);
        acc.set_block(r0, c0, &if sign { cur.sub(t) } else { cur.add(t) });
    }
}

/// `ι(v)_w = τ(w₀) v_{w₀ w}`.
pub fn iota<F: Field>(rep: &BraidRepresentation<F>) -> Matrix<F> {
    let sys = rep.system();
    let d = rep.dim();
    let n = sys.order() * d;
    let w0 = sys.w0();
    let t = rep.tau(w0);
    let mut m = Matrix::zeros(rep.context(), n, n);
    for w in sys.elements() {
        m.set_block(w.index() * d, sys.mul(w0, w).index() * d, t);
    }
    m
}

/// Whether `ι` preserves `K_W(V)` and `ι²` is `π = τ(w₀)²` in every coordinate.
pub fn iota_check<F: Field>(rep: &BraidRepresentation<F>, kw: &KWSpace<F>) -> Result<bool, KwError> {
    let i = iota(rep);
    let pi = rep.tau(rep.system().w0()).pow(2);
    let blocks = vec![pi; rep.system().order()];
    let squared_ok = i.mul(&i) == Matrix::block_diag(rep.context(), &blocks);
    let preserves = kw.space.image_under(&i)?.is_subspace_of(&kw.space)?;
    Ok(squared_ok && preserves)
}

fn holds_on_basis<F: Field>(lhs: &Matrix<F>, rhs: &Matrix<F>, space: &Subspace<F>) -> bool {
    space
        .basis_vectors()
        .iter()
        .all(|v| lhs.mul_vec(v) == rhs.mul_vec(v))
}

/// `Σ_{J ⊊ S} (−1)^{|J|} Σ_x i_{W_J x} p_{W_J x} = ι + (−1)^{n−1}` on `K_W(V)`.
pub fn euler_identity_check<F: Field>(rep: &BraidRepresentation<F>, kw: &KWSpace<F>) -> bool {
    let sys = rep.system();
    let rank = sys.rank();
    let n = sys.order() * rep.dim();
    let ctx = rep.context();
    let all: Vec<GroupElement> = sys.elements().collect();
    let mut lhs = Matrix::zeros(ctx, n, n);
    for j in 0..(sys.all_gens()) {
        let odd = j.count_ones() % 2 == 1;
        for coset in sys.right_cosets(j) {
            coset_composite_into(rep, j, &coset, &all, odd, &mut lhs);
        }
    }
    let id = Matrix::identity(ctx, n);
    let rhs = if rank % 2 == 1 { iota(rep).add(&id) } else { iota(rep).sub(&id) };
    holds_on_basis(&lhs, &rhs, &kw.space)
}

/// The space `V′₀` of tuples over the right half-set `P_i`.
pub fn half_space<F: Field>(rep: &BraidRepresentation<F>, i: usize) -> CosetSpace<F> {
    let sys = rep.system();
    let elements = sys.half_set(i, Side::Right);
    let gens: Vec<usize> = (0..sys.rank()).collect();
    let space = compatible_tuples(rep, &elements, &gens);
    CosetSpace {
        j: sys.all_gens(),
        elements,
        space,
    }
}

/// `Σ_{J ≠ ∅} (−1)^{|J|−1} Σ_x i_{W_{S−J}x, P_i} p_{W_{S−J}x} = id` on
/// `V′₀`, the sum running over cosets with `W^{(j)} x ⊂ P_i` for all `j ∈ J`.
pub fn half_identity_check<F: Field>(rep: &BraidRepresentation<F>, i: usize) -> Result<bool, KwError> {
    let sys = rep.system();
    if i >= sys.rank() {
        return Err(BraidError::BadIndex(i).into());
    }
    let half = half_space(rep, i);
    let d = rep.dim();
    let ctx = rep.context();
    let n = sys.order() * d;
    let full = sys.all_gens();
    let mut op = Matrix::zeros(ctx, n, n);
    for j in 1..=full {
        let sub = full & !j;
        let sign = j.count_ones() % 2 == 0;
        for coset in sys.right_cosets(sub) {
            let x = coset[0];
            let qualifies = genset_members(j, sys.rank()).into_iter().all(|jj| {
                sys.coset_in_half(full & !(1 << jj), x, i).unwrap_or(false)
            });
            if qualifies {
                coset_composite_into(rep, sub, &coset, &half.elements, sign, &mut op);
            }
        }
    }
    // Restrict the operator to P_i coordinates on both sides.
    let idx: Vec<usize> = half
        .elements
        .iter()
        .flat_map(|w| (0..d).map(move |k| w.index() * d + k))
        .collect();
    let op = op.select_rows(&idx).select_cols(&idx);
    let id = Matrix::identity(ctx, idx.len());
    Ok(holds_on_basis(&op, &id, &half.space))
}

/// The stacked sections `[i_y]_{y ∈ W}`, an `|W|·d × |W|·d` matrix.
pub fn sections_matrix<F: Field>(rep: &BraidRepresentation<F>) -> Matrix<F> {
    let sys = rep.system();
    let d = rep.dim();
    let n = sys.order() * d;
    let mut m = Matrix::zeros(rep.context(), n, n);
    for y in sys.elements() {
        m.set_block(0, y.index() * d, &section_i(rep, y));
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessReport {
    pub dim_v: usize,
    pub dim_kw: usize,
    pub dim_span: usize,
    pub good: bool,
    pub cokernel_dim: usize,
    /// `dim Σ_{ℓ(y) ≤ k} i_y(V)` for `k = 0, 1, …, ℓ(w₀)`.
    pub span_by_length: Vec<usize>,
}

pub fn is_good<F: Field>(rep: &BraidRepresentation<F>) -> GoodnessReport {
    let kw = kw_space(rep);
    goodness_of(rep, &kw)
}

pub fn goodness_of<F: Field>(rep: &BraidRepresentation<F>, kw: &KWSpace<F>) -> GoodnessReport {
    let sys = rep.system();
    let d = rep.dim();
    let sections = sections_matrix(rep);
    let mut span_by_length = Vec::new();
    for k in 0..=sys.length(sys.w0()) {
        let cols: Vec<usize> = sys
            .elements()
            .filter(|&y| sys.length(y) <= k)
            .flat_map(|y| (0..d).map(move |c| y.index() * d + c))
            .collect();
        span_by_length.push(sections.select_cols(&cols).rank());
    }
    let dim_span = *span_by_length.last().expect("at least the identity");
    GoodnessReport {
        dim_v: d,
        dim_kw: kw.dim(),
        dim_span,
        good: dim_span == kw.dim(),
        cokernel_dim: kw.dim() - dim_span,
        span_by_length,
    }
}

/// Every `i_y` lands in `K_W(V)` and `p_y i_y = id`.
pub fn sections_check<F: Field>(rep: &BraidRepresentation<F>, kw: &KWSpace<F>) -> Result<bool, KwError> {
    for y in rep.system().elements() {
        let i = section_i(rep, y);
        if !i.image().is_subspace_of(&kw.space)? || p_y(rep, y).mul(&i) != rep.identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim V_s` for each generator.
pub fn dims_v_s<F: Field>(rep: &BraidRepresentation<F>) -> Vec<usize> {
    (0..rep.system().rank()).map(|s| v_s(rep, s).dim()).collect()
}

/// Every `V_w`, checked for well-definedness.
pub fn all_v_w<F: Field>(rep: &BraidRepresentation<F>, limit: usize) -> Result<Vec<Subspace<F>>, KwError> {
    rep.system().elements().map(|w| v_w(rep, w, limit)).collect()
}

pub(crate) fn same_system<F: Field>(
    a: &BraidRepresentation<F>,
    b: &BraidRepresentation<F>,
) -> Result<(), KwError> {
    let (sa, sb): (&CoxeterSystem, &CoxeterSystem) = (a.system(), b.system());
    if sa.coxeter_matrix() != sb.coxeter_matrix() || a.dim() != b.dim() {
        return Err(KwError::Mismatch(format!(
            "rank {} dim {} vs rank {} dim {}",
            sa.rank(),
            a.dim(),
            sb.rank(),
            b.dim()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
