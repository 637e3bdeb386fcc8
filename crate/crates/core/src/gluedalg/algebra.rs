//! Finite-dimensional algebras over a prime field and their modules, with a
//! MeatAxe for composition factors.

use rand::Rng;

use crate::exact::{Field, Fp, Matrix, Poly, Ring, Subspace};

use super::GlueError;

pub type Vector = Vec<Fp>;

pub(crate) fn fp_vec(p: u64, v: &[i64]) -> Vector {
    v.iter().map(|&x| Fp::new(x, p)).collect()
}

/// An associative unital algebra given by the matrices of left
/// multiplication by each basis element: column `h` of `left[g]` is `g·h`.
#[derive(Clone, Debug)]
pub struct Algebra {
    p: u64,
    dim: usize,
    left: Vec<Matrix<Fp>>,
    unit: Vector,
    generators: Vec<usize>,
}

impl Algebra {
    /// Build from a product on basis elements. Associativity and the unit
    /// are checked on all basis triples; the first failing triple is passed
    /// to `on_failure` to produce the error.
    pub fn from_product(
        p: u64,
        dim: usize,
        unit: Vector,
        mut product: impl FnMut(usize, usize) -> Vector,
        on_failure: impl Fn(usize, usize, usize) -> GlueError,
    ) -> Result<Self, GlueError> {
        let left: Vec<Matrix<Fp>> = (0..dim)
            .map(|g| {
                let mut m = Matrix::zeros(&p, dim, dim);
                for h in 0..dim {
                    for (r, c) in product(g, h).into_iter().enumerate() {
                        m.set(r, h, c);
                    }
                }
                m
            })
            .collect();
        let mut alg = Algebra {
            p,
            dim,
            left,
            unit,
            generators: Vec::new(),
        };
        for a in 0..dim {
            for b in 0..dim {
                let ab = alg.left[a].col(b);
                for c in 0..dim {
                    let lhs = alg.mul_vec_basis(&ab, c);
                    let bc = alg.left[b].col(c);
                    let rhs = sparse_mul_vec(&alg.left[a], &bc);
                    if lhs != rhs {
                        return Err(on_failure(a, b, c));
                    }
                }
            }
        }
        let lu = alg.element_matrix(&alg.unit);
        let id = Matrix::identity(&p, dim);
        if lu != id || (0..dim).any(|g| alg.left[g].mul_vec(&alg.unit) != unit_vec(p, dim, g)) {
            return Err(GlueError::UnitFailure);
        }
        alg.generators = alg.find_generators();
        Ok(alg)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn left(&self, g: usize) -> &Matrix<Fp> {
        &self.left[g]
    }

    /// Basis elements that generate the algebra together with `1`.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `x·b_c` for a vector `x`.
    fn mul_vec_basis(&self, x: &[Fp], c: usize) -> Vector {
        let mut out = vec![Fp::zero(&self.p); self.dim];
        for (g, xg) in x.iter().enumerate() {
            if xg.is_zero() {
                continue;
            }
            for r in 0..self.dim {
                out[r] = out[r].add(&xg.mul(self.left[g].get(r, c)));
            }
        }
        out
    }

    pub fn product(&self, x: &[Fp], y: &[Fp]) -> Vector {
        self.element_matrix(x).mul_vec(y)
    }

    /// Left multiplication by `x`.
    pub fn element_matrix(&self, x: &[Fp]) -> Matrix<Fp> {
        combine(self.p, self.dim, &self.left, x)
    }

    pub fn regular_module(&self) -> Module {
        Module::new(self.p, self.dim, self.left.clone())
    }

    fn find_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut sub = self.closure(&gens);
        for g in 0..self.dim {
            if sub.dim() == self.dim {
                break;
            }
            if !sub.contains(&unit_vec(self.p, self.dim, g)).expect("same ambient") {
                gens.push(g);
                sub = self.closure(&gens);
            }
        }
        gens
    }

    /// Subalgebra generated by `1` and the chosen basis elements: the
    /// span of the unit under left multiplication by the generators.
    fn closure(&self, gens: &[usize]) -> Subspace<Fp> {
        let mats: Vec<Matrix<Fp>> = gens.iter().map(|&g| self.left[g].clone()).collect();
        spin(self.p, self.dim, &mats, vec![self.unit.clone()])
    }
}

/// `m·v`, skipping the zero entries of `v`.
fn sparse_mul_vec(m: &Matrix<Fp>, v: &[Fp]) -> Vector {
    let p = *m.context();
    let mut out = vec![Fp::zero(&p); m.nrows()];
    for (h, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (r, o) in out.iter_mut().enumerate() {
            let e = m.get(r, h);
            if !e.is_zero() {
                *o = o.add(&c.mul(e));
            }
        }
    }
    out
}

fn unit_vec(p: u64, n: usize, i: usize) -> Vector {
    let mut v = vec![Fp::zero(&p); n];
    v[i] = Fp::one(&p);
    v
}

fn combine(p: u64, dim: usize, mats: &[Matrix<Fp>], x: &[Fp]) -> Matrix<Fp> {
    let mut m = Matrix::zeros(&p, dim, dim);
    for (g, c) in x.iter().enumerate() {
        if !c.is_zero() {
            m = m.add(&mats[g].scale(c));
        }
    }
    m
}

/// Smallest subspace containing `seeds` and stable under `mats`.
pub(crate) fn spin(p: u64, dim: usize, mats: &[Matrix<Fp>], seeds: Vec<Vector>) -> Subspace<Fp> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut span = Subspace::zero(&p, dim);
    let mut queue = seeds;
    while let Some(v) = queue.pop() {
        if span.contains(&v).expect("same ambient") {
            continue;
        }
        basis.push(v.clone());
        span = Subspace::span(&p, dim, basis.clone());
        for m in mats {
            queue.push(m.mul_vec(&v));
        }
    }
    span
}

/// A module over an [`Algebra`], given by the action of every basis element.
#[derive(Clone, Debug)]
pub struct Module {
    p: u64,
    dim: usize,
    actions: Vec<Matrix<Fp>>,
}

impl Module {
    pub fn new(p: u64, dim: usize, actions: Vec<Matrix<Fp>>) -> Self {
        Module { p, dim, actions }
    }

    pub fn zero(alg: &Algebra) -> Self {
        Module::new(alg.p, 0, vec![Matrix::zeros(&alg.p, 0, 0); alg.dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn action(&self, g: usize) -> &Matrix<Fp> {
        &self.actions[g]
    }

    pub fn actions(&self) -> &[Matrix<Fp>] {
        &self.actions
    }

    pub fn act(&self, x: &[Fp]) -> Matrix<Fp> {
        combine(self.p, self.dim, &self.actions, x)
    }

    /// `A_g A_h = A_{gh}` on all basis pairs and `A_1 = 1`.
    pub fn is_module_of(&self, alg: &Algebra) -> bool {
        if self.actions.len() != alg.dim || self.actions.iter().any(|a| a.nrows() != self.dim || a.ncols() != self.dim) {
            return false;
        }
        if self.act(&alg.unit) != Matrix::identity(&self.p, self.dim) {
            return false;
        }
        (0..alg.dim).all(|g| {
            (0..alg.dim).all(|h| self.actions[g].mul(&self.actions[h]) == self.act(&alg.left[g].col(h)))
        })
    }

    pub fn spin(&self, seeds: Vec<Vector>) -> Subspace<Fp> {
        spin(self.p, self.dim, &self.actions, seeds)
    }

    pub fn is_submodule(&self, sub: &Subspace<Fp>) -> bool {
        sub.basis_vectors().iter().all(|v| {
            self.actions
                .iter()
                .all(|a| sub.contains(&a.mul_vec(v)).expect("same ambient"))
        })
    }

    /// The action on a stable subspace, in the coordinates given by the
    /// echelon basis of `sub`.
    pub fn submodule(&self, sub: &Subspace<Fp>) -> Module {
        let basis = sub.basis_vectors();
        let piv = sub.pivots().to_vec();
        let k = basis.len();
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let mut m = Matrix::zeros(&self.p, k, k);
                for (c, b) in basis.iter().enumerate() {
                    let img = a.mul_vec(b);
                    for (r, &pv) in piv.iter().enumerate() {
                        m.set(r, c, img[pv].clone());
                    }
                }
                m
            })
            .collect();
        Module::new(self.p, k, actions)
    }

    /// The action on `V / sub`, with coordinates the non-pivot positions.
    pub fn quotient(&self, sub: &Subspace<Fp>) -> Module {
        let q = sub.quotient_matrix();
        let mut is_pivot = vec![false; self.dim];
        for &pv in sub.pivots() {
            is_pivot[pv] = true;
        }
        let free: Vec<usize> = (0..self.dim).filter(|&c| !is_pivot[c]).collect();
        let actions = self
            .actions
            .iter()
            .map(|a| q.mul(&a.select_cols(&free)))
            .collect();
        Module::new(self.p, free.len(), actions)
    }

    /// `{v : ⟨t, v⟩ = 0 for t ∈ dual}` for a subspace of the dual space.
    fn annihilator(&self, dual: &Subspace<Fp>) -> Subspace<Fp> {
        if dual.is_zero() {
            return Subspace::full(&self.p, self.dim);
        }
        dual.basis().kernel()
    }
}

/// Basis of `Hom_A(m, n)`: matrices `X` with `X m_g = n_g X` for the
/// generators of the algebra.
pub fn hom_space(alg: &Algebra, m: &Module, n: &Module) -> Vec<Matrix<Fp>> {
    let ms: Vec<&Matrix<Fp>> = alg.generators.iter().map(|&g| &m.actions[g]).collect();
    let ns: Vec<&Matrix<Fp>> = alg.generators.iter().map(|&g| &n.actions[g]).collect();
    let dm = m.dim;
    intertwiners(alg.p, &ms, &ns, m.dim, n.dim)
        .into_iter()
        .map(|v| Matrix::from_rows(&alg.p, dm, v.chunks(dm).map(|c| c.to_vec()).collect()).expect("dn x dm"))
        .collect()
}

/// Kernel basis of `X ↦ (X m_g − n_g X)_g` for `X` of shape `dn × dm`,
/// vectorized row by row (`X[r][c]` at `r·dm + c`).
pub(crate) fn intertwiners(
    p: u64,
    ms: &[&Matrix<Fp>],
    ns: &[&Matrix<Fp>],
    dm: usize,
    dn: usize,
) -> Vec<Vector> {
    let vars = dn * dm;
    if vars == 0 {
        return Vec::new();
    }
    if ms.is_empty() {
        return Subspace::full(&p, vars).basis_vectors();
    }
    let mut eq: Matrix<Fp> = Matrix::zeros(&p, vars * ms.len(), vars);
    for (g, (a, b)) in ms.iter().zip(ns).enumerate() {
        for r in 0..dn {
            for c in 0..dm {
                let row = g * vars + r * dm + c;
                for t in 0..dm {
                    let v = a.get(t, c);
                    if !v.is_zero() {
                        let cur = eq.get(row, r * dm + t).add(v);
                        eq.set(row, r * dm + t, cur);
                    }
                }
                for t in 0..dn {
                    let v = b.get(r, t);
                    if !v.is_zero() {
                        let cur = eq.get(row, t * dm + c).sub(v);
                        eq.set(row, t * dm + c, cur);
                    }
                }
            }
        }
    }
    eq.kernel_basis()
}

/// Isomorphism test for simple modules (Schur): equal dimension and a
/// nonzero homomorphism.
pub fn simples_isomorphic(alg: &Algebra, a: &Module, b: &Module) -> bool {
    a.dim == b.dim && (a.dim == 0 || !hom_space(alg, a, b).is_empty())
}

/// Characteristic polynomial `det(x − a)` by reduction to Hessenberg form.
pub(crate) fn charpoly(a: &Matrix<Fp>) -> Poly<Fp> {
    let p = *a.context();
    let n = a.nrows();
    let mut h = a.clone();
    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&r| !h.get(r, c).is_zero()) else {
            continue;
        };
        if piv != c + 1 {
            h.swap_rows(piv, c + 1);
            for r in 0..n {
                let (x, y) = (h.get(r, piv).clone(), h.get(r, c + 1).clone());
                h.set(r, piv, y);
                h.set(r, c + 1, x);
            }
        }
        let inv = h.get(c + 1, c).inv().expect("nonzero pivot");
        for r in c + 2..n {
            let f = h.get(r, c).mul(&inv);
            if f.is_zero() {
                continue;
            }
            for k in 0..n {
                let v = h.get(r, k).sub(&f.mul(h.get(c + 1, k)));
                h.set(r, k, v);
            }
            for k in 0..n {
                let v = h.get(k, c + 1).add(&f.mul(h.get(k, r)));
                h.set(k, c + 1, v);
            }
        }
    }
    let x = Poly::<Fp>::x(&p);
    let mut polys: Vec<Poly<Fp>> = vec![Poly::constant(Fp::one(&p))];
    for k in 0..n {
        let mut pk = x.sub(&Poly::constant(h.get(k, k).clone())).mul(&polys[k]);
        let mut prod = Fp::one(&p);
        for i in (0..k).rev() {
            prod = prod.mul(h.get(i + 1, i));
            let term = polys[i].scale(&prod.mul(h.get(i, k)));
            pk = pk.sub(&term);
        }
        polys.push(pk);
    }
    polys.pop().expect("at least the constant")
}

fn roots(f: &Poly<Fp>, p: u64) -> Vec<Fp> {
    (0..p)
        .map(|v| Fp::new(v as i64, p))
        .filter(|x| f.eval(x).is_zero())
        .collect()
}

/// Number of random elements tried before giving up on a module.
pub const MEATAXE_TRIES: usize = 200;

/// A proper nonzero submodule, or `None` when the module is certified
/// irreducible by Norton's test.
pub fn find_submodule(
    alg: &Algebra,
    m: &Module,
    rng: &mut impl Rng,
) -> Result<Option<Subspace<Fp>>, GlueError> {
    let p = m.p;
    let d = m.dim;
    if d <= 1 {
        return Ok(None);
    }
    let gens: Vec<Matrix<Fp>> = alg.generators.iter().map(|&g| m.actions[g].clone()).collect();
    let transposed: Vec<Matrix<Fp>> = gens.iter().map(|a| a.transpose()).collect();
    for _ in 0..MEATAXE_TRIES {
        let coeffs: Vector = (0..alg.dim)
            .map(|_| Fp::new(rng.gen_range(0..p) as i64, p))
            .collect();
        let a = m.act(&coeffs);
        for lambda in roots(&charpoly(&a), p) {
            let n = a.sub(&Matrix::scalar(&p, d, &lambda));
            let kernel = n.kernel_basis();
            for v in &kernel {
                let s = spin(p, d, &gens, vec![v.clone()]);
                if s.dim() < d {
                    return Ok(Some(s));
                }
            }
            if kernel.len() == 1 {
                let w = n.transpose().kernel_basis().remove(0);
                let t = spin(p, d, &transposed, vec![w]);
                if t.dim() < d {
                    return Ok(Some(m.annihilator(&t)));
                }
                return Ok(None);
            }
        }
    }
    Err(GlueError::FieldTooSmall { p, dim: d })
}

/// Composition factors, in the order they are split off.
pub fn composition_factors(alg: &Algebra, m: &Module, rng: &mut impl Rng) -> Result<Vec<Module>, GlueError> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(cur) = stack.pop() {
        if cur.dim == 0 {
            continue;
        }
        match find_submodule(alg, &cur, rng)? {
            None => out.push(cur),
            Some(sub) => {
                stack.push(cur.quotient(&sub));
                stack.push(cur.submodule(&sub));
            }
        }
    }
    Ok(out)
}

pub fn is_simple(alg: &Algebra, m: &Module, rng: &mut impl Rng) -> Result<bool, GlueError> {
    Ok(m.dim > 0 && find_submodule(alg, m, rng)?.is_none())
}

/// Simple modules of an algebra, from the composition factors of the
/// regular module, with the multiplicity of each.
#[derive(Clone, Debug)]
pub struct SimpleList {
    pub simples: Vec<Module>,
    pub regular_multiplicities: Vec<usize>,
}

impl SimpleList {
    /// `Σ dim S · [regular : S] = dim A`.
    pub fn accounts_for(&self, alg: &Algebra) -> bool {
        self.simples
            .iter()
            .zip(&self.regular_multiplicities)
            .map(|(s, m)| s.dim * m)
            .sum::<usize>()
            == alg.dim
    }

    pub fn index_of(&self, alg: &Algebra, m: &Module) -> Option<usize> {
        self.simples.iter().position(|s| simples_isomorphic(alg, s, m))
    }
}

pub fn simple_modules(alg: &Algebra, cap: usize, rng: &mut impl Rng) -> Result<SimpleList, GlueError> {
    if alg.dim > cap {
        return Err(GlueError::CapExceeded { dim: alg.dim, cap });
    }
    let factors = composition_factors(alg, &alg.regular_module(), rng)?;
    let mut list = SimpleList {
        simples: Vec::new(),
        regular_multiplicities: Vec::new(),
    };
    for f in factors {
        match list.index_of(alg, &f) {
            Some(i) => list.regular_multiplicities[i] += 1,
            None => {
                list.simples.push(f);
                list.regular_multiplicities.push(1);
            }
        }
    }
    // Stable order: by dimension, then by discovery.
    let mut order: Vec<usize> = (0..list.simples.len()).collect();
    order.sort_by_key(|&i| list.simples[i].dim);
    Ok(SimpleList {
        simples: order.iter().map(|&i| list.simples[i].clone()).collect(),
        regular_multiplicities: order.iter().map(|&i| list.regular_multiplicities[i]).collect(),
    })
}

/// Composition multiplicities of `m` against a list of simples.
pub fn multiplicities(
    alg: &Algebra,
    m: &Module,
    simples: &SimpleList,
    rng: &mut impl Rng,
) -> Result<Vec<usize>, GlueError> {
    let mut out = vec![0; simples.simples.len()];
    for f in composition_factors(alg, m, rng)? {
        let i = simples
            .index_of(alg, &f)
            .ok_or_else(|| GlueError::Shape("composition factor outside the list of simples".into()))?;
        out[i] += 1;
    }
    Ok(out)
}

/// `M ⊗_R N` for a right module `M` (matrices of `m ↦ m·r_b`) and a left
/// module `N` (matrices of `n ↦ r_b n`). Returns the relation subspace of
/// `M ⊗_F N` (index `x·dim N + y`).
pub fn tensor_relations(p: u64, right: &[Matrix<Fp>], left: &[Matrix<Fp>], dm: usize, dn: usize) -> Subspace<Fp> {
    let n = dm * dn;
    let mut rels = Vec::new();
    for (rb, lb) in right.iter().zip(left) {
        for x in 0..dm {
            for y in 0..dn {
                let mut v = vec![Fp::zero(&p); n];
                for x2 in 0..dm {
                    let c = rb.get(x2, x);
                    if !c.is_zero() {
                        v[x2 * dn + y] = v[x2 * dn + y].add(c);
                    }
                }
                for y2 in 0..dn {
                    let c = lb.get(y2, y);
                    if !c.is_zero() {
                        v[x * dn + y2] = v[x * dn + y2].sub(c);
                    }
                }
                if v.iter().any(|c| !c.is_zero()) {
                    rels.push(v);
                }
            }
        }
    }
    Subspace::span(&p, n, rels)
}
