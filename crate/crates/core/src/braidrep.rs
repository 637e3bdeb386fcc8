//! Representations of the braid group attached to a finite Coxeter system.
//!
//! A representation is a list of invertible generator matrices satisfying
//! the braid relations. Elements of `W` act through the section `τ` given by
//! ShortLex reduced words.

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::coxeter::{genset_members, CoxeterError, CoxeterSystem, GenSet, GroupElement};
use crate::exact::{Field, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("representation failed validation: {0}")]
    ValidationFailed(String),
    #[error("generator index {0} out of range")]
    BadIndex(usize),
    #[error("expected {expected} generator matrices of size {dim}, got {found}")]
    Shape {
        expected: usize,
        dim: usize,
        found: String,
    },
    #[error("relation check failed: {0}")]
    RelationFailed(String),
    #[error("Coxeter matrices do not match: {0}")]
    SystemMismatch(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// One letter of a braid word: a generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BraidLetter {
    pub gen: usize,
    pub inverse: bool,
}

/// A word in the generators of the braid group and their inverses.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BraidWord(pub Vec<BraidLetter>);

impl BraidWord {
    /// Positive word from 0-based generator indices.
    pub fn positive(gens: &[usize]) -> Self {
        BraidWord(
            gens.iter()
                .map(|&gen| BraidLetter {
                    gen,
                    inverse: false,
                })
                .collect(),
        )
    }

    /// From 1-based signed indices (`-2` is the inverse of the second
    /// generator).
    pub fn from_signed(letters: &[i32]) -> Result<Self, BraidError> {
        letters
            .iter()
            .map(|&k| {
                if k == 0 {
                    Err(BraidError::BadIndex(0))
                } else {
                    Ok(BraidLetter {
                        gen: k.unsigned_abs() as usize - 1,
                        inverse: k < 0,
                    })
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BraidWord)
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.0
            .iter()
            .map(|l| {
                let k = l.gen as i32 + 1;
                if l.inverse {
                    -k
                } else {
                    k
                }
            })
            .collect()
    }

    pub fn inverse(&self) -> Self {
        BraidWord(
            self.0
                .iter()
                .rev()
                .map(|l| BraidLetter {
                    gen: l.gen,
                    inverse: !l.inverse,
                })
                .collect(),
        )
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().copied());
        BraidWord(v)
    }

    /// Image in `W` (every generator becomes an involution).
    pub fn image(&self, sys: &CoxeterSystem) -> Result<GroupElement, CoxeterError> {
        sys.from_word(&self.0.iter().map(|l| l.gen).collect::<Vec<_>>())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_signed().iter().map(|k| k.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Outcome of checking one braid relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub s: usize,
    pub t: usize,
    pub m: u32,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub shape_ok: bool,
    pub invertible: Vec<bool>,
    pub relations: Vec<RelationCheck>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.shape_ok && self.invertible.iter().all(|&b| b) && self.relations.iter().all(|r| r.holds)
    }

    fn summary(&self) -> String {
        if !self.shape_ok {
            return "generator shapes".into();
        }
        let mut parts = Vec::new();
        for (s, &inv) in self.invertible.iter().enumerate() {
            if !inv {
                parts.push(format!("s{} not invertible", s + 1));
            }
        }
        for r in self.relations.iter().filter(|r| !r.holds) {
            parts.push(format!("braid relation (s{} s{})^{} broken", r.s + 1, r.t + 1, r.m));
        }
        parts.join("; ")
    }
}

/// Alternating product `a b a ...` with `m` factors.
fn alternating<F: Field>(a: &Matrix<F>, b: &Matrix<F>, m: u32) -> Matrix<F> {
    let mut acc = Matrix::identity(a.context(), a.nrows());
    for k in 0..m {
        acc = acc.mul(if k % 2 == 0 { a } else { b });
    }
    acc
}

/// Check shapes, invertibility and all braid relations.
pub fn validate<F: Field>(
    system: &CoxeterSystem,
    dim: usize,
    gens: &[Matrix<F>],
) -> ValidationReport {
    let shape_ok = gens.len() == system.rank()
        && gens.iter().all(|g| g.nrows() == dim && g.ncols() == dim);
    if !shape_ok {
        return ValidationReport {
            shape_ok,
            invertible: vec![],
            relations: vec![],
        };
    }
    let invertible = gens.iter().map(|g| g.is_invertible()).collect();
    let mut relations = Vec::new();
    for s in 0..system.rank() {
        for t in s + 1..system.rank() {
            let m = system.m(s, t);
            relations.push(RelationCheck {
                s,
                t,
                m,
                holds: alternating(&gens[s], &gens[t], m) == alternating(&gens[t], &gens[s], m),
            });
        }
    }
    ValidationReport {
        shape_ok,
        invertible,
        relations,
    }
}

/// A validated representation of the braid group of `(W, S)`.
#[derive(Clone, Debug)]
pub struct BraidRepresentation<F: Field> {
    system: Arc<CoxeterSystem>,
    dim: usize,
    ctx: F::Ctx,
    gens: Vec<Matrix<F>>,
    gen_inv: Vec<Matrix<F>>,
    tau_cache: Vec<OnceLock<Matrix<F>>>,
}

impl<F: Field> BraidRepresentation<F> {
    pub fn new(
        system: Arc<CoxeterSystem>,
        ctx: &F::Ctx,
        dim: usize,
        gens: Vec<Matrix<F>>,
    ) -> Result<Self, BraidError> {
        let report = validate(&system, dim, &gens);
        if !report.shape_ok {
            return Err(BraidError::Shape {
                expected: system.rank(),
                dim,
                found: gens
                    .iter()
                    .map(|g| format!("{}x{}", g.nrows(), g.ncols()))
                    .collect::<Vec<_>>()
                    .join(", "),
            });
        }
        if !report.ok() {
            return Err(BraidError::ValidationFailed(report.summary()));
        }
        let gen_inv = gens
            .iter()
            .map(|g| g.inverse().expect("validated invertible"))
            .collect();
        let n = system.order();
        Ok(BraidRepresentation {
            system,
            dim,
            ctx: ctx.clone(),
            gens,
            gen_inv,
            tau_cache: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    /// Every generator acts by the same scalar multiple of the identity
    /// on a `dim`-dimensional space.
    pub fn scalar(system: Arc<CoxeterSystem>, ctx: &F::Ctx, dim: usize, values: &[F]) -> Result<Self, BraidError> {
        let gens = values.iter().map(|v| Matrix::scalar(ctx, dim, v)).collect();
        Self::new(system, ctx, dim, gens)
    }

    pub fn trivial(system: Arc<CoxeterSystem>, ctx: &F::Ctx, dim: usize) -> Self {
        let r = system.rank();
        Self::scalar(system, ctx, dim, &vec![F::one(ctx); r]).expect("trivial representation")
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn context(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn gens(&self) -> &[Matrix<F>] {
        &self.gens
    }

    pub fn gen(&self, s: usize) -> &Matrix<F> {
        &self.gens[s]
    }

    pub fn gen_inv(&self, s: usize) -> &Matrix<F> {
        &self.gen_inv[s]
    }

    pub fn identity(&self) -> Matrix<F> {
        Matrix::identity(&self.ctx, self.dim)
    }

    /// Matrix of a braid word; letters act left to right as a product.
    pub fn act(&self, word: &BraidWord) -> Result<Matrix<F>, BraidError> {
        let mut acc = self.identity();
        for l in &word.0 {
            if l.gen >= self.system.rank() {
                return Err(BraidError::BadIndex(l.gen));
            }
            acc = acc.mul(if l.inverse {
                &self.gen_inv[l.gen]
            } else {
                &self.gens[l.gen]
            });
        }
        Ok(acc)
    }

    /// Product of generator matrices along a positive word.
    pub fn act_positive(&self, word: &[usize]) -> Matrix<F> {
        word.iter()
            .fold(self.identity(), |acc, &s| acc.mul(&self.gens[s]))
    }

    /// `τ(w)`, the image of the ShortLex reduced word of `w`.
    pub fn tau(&self, w: GroupElement) -> &Matrix<F> {
        self.tau_cache[w.index()].get_or_init(|| {
            let nf = self.system.normal_form(w);
            match nf.split_last() {
                None => self.identity(),
                Some((&t, prefix)) => {
                    let u = self.system.from_word(prefix).expect("prefix of a normal form");
                    self.tau(u).mul(&self.gens[t])
                }
            }
        })
    }

    /// `τ(w)` evaluated along every reduced word (up to `limit` words);
    /// true when all agree.
    pub fn tau_is_well_defined(&self, w: GroupElement, limit: Option<usize>) -> bool {
        let t = self.tau(w);
        self.system
            .reduced_words(w, limit)
            .iter()
            .all(|word| &self.act_positive(word) == t)
    }

    /// `(ρ(s) − q)(ρ(s)² − 1) = 0` for every generator.
    pub fn check_cubic(&self, q: &F) -> bool {
        let one = self.identity();
        self.gens.iter().all(|g| {
            g.sub(&one.scale(q))
                .mul(&g.mul(g).sub(&one))
                .is_zero()
        })
    }

    /// `(ρ(s) − q)(ρ(s) + 1) = 0` for every generator.
    pub fn check_quadratic(&self, q: &F) -> bool {
        let one = self.identity();
        self.gens
            .iter()
            .all(|g| g.sub(&one.scale(q)).mul(&g.add(&one)).is_zero())
    }

    /// `(ρ(s) + u)(ρ(s)² − 1) = 0` for every generator.
    pub fn check_cubic_plus(&self, u: &F) -> bool {
        self.check_cubic(&u.neg())
    }

    /// `π = τ(w₀)²`, asserted to commute with every generator.
    pub fn central_element(&self) -> Matrix<F> {
        let t = self.tau(self.system.w0());
        let pi = t.mul(t);
        for g in &self.gens {
            assert!(pi.commutes_with(g), "tau(w0)^2 is not central");
        }
        pi
    }

    /// Conjugate every generator by an invertible matrix: `s ↦ P⁻¹ ρ(s) P`.
    pub fn conjugate(&self, p: &Matrix<F>) -> Result<Self, BraidError> {
        let pinv = p
            .inverse()
            .ok_or_else(|| BraidError::ValidationFailed("change of basis is singular".into()))?;
        let gens = self.gens.iter().map(|g| pinv.mul(g).mul(p)).collect();
        Self::new(self.system.clone(), &self.ctx, self.dim, gens)
    }

    /// Direct sum of representations of the same system.
    pub fn direct_sum(parts: &[Self]) -> Result<Self, BraidError> {
        let first = parts
            .first()
            .ok_or_else(|| BraidError::ValidationFailed("empty direct sum".into()))?;
        let sys = first.system.clone();
        let ctx = first.ctx.clone();
        let dim = parts.iter().map(|p| p.dim).sum();
        let gens = (0..sys.rank())
            .map(|s| {
                let blocks: Vec<Matrix<F>> = parts.iter().map(|p| p.gens[s].clone()).collect();
                Matrix::block_diag(&ctx, &blocks)
            })
            .collect();
        Self::new(sys, &ctx, dim, gens)
    }

    /// `s ↦ ρ(s)ᵀ`. Together with [`Self::contragredient`] these are the two
    /// candidate duals of a braid representation.
    pub fn transpose_rep(&self) -> Result<Self, BraidError> {
        let gens = self.gens.iter().map(|g| g.transpose()).collect();
        Self::new(self.system.clone(), &self.ctx, self.dim, gens)
    }

    /// `s ↦ (ρ(s)⁻¹)ᵀ`.
    pub fn contragredient(&self) -> Result<Self, BraidError> {
        let gens = self.gen_inv.iter().map(|g| g.transpose()).collect();
        Self::new(self.system.clone(), &self.ctx, self.dim, gens)
    }
}

/// Result of [`cubic_to_quadratic_transport`].
#[derive(Clone, Debug)]
pub struct Transport<F: Field> {
    pub rep: BraidRepresentation<F>,
    /// The parameter `u = q⁻¹` for which `(s + u)(s² − 1) = 0` holds.
    pub u: F,
    pub cubic_holds: bool,
}

/// Send a representation satisfying `(s − q)(s + 1) = 0` along
/// `s ↦ −s⁻¹` and verify `(s + u)(s² − 1) = 0` with `u = q⁻¹`.
pub fn cubic_to_quadratic_transport<F: Field>(
    rep: &BraidRepresentation<F>,
    q: &F,
) -> Result<Transport<F>, BraidError> {
    if !rep.check_quadratic(q) {
        return Err(BraidError::RelationFailed(format!(
            "input does not satisfy (s - {q})(s + 1) = 0"
        )));
    }
    let u = q
        .inv()
        .ok_or_else(|| BraidError::RelationFailed("q = 0 is not invertible".into()))?;
    let gens = rep.gen_inv.iter().map(|g| g.neg()).collect();
    let out = BraidRepresentation::new(rep.system.clone(), &rep.ctx, rep.dim, gens)?;
    let cubic_holds = out.check_cubic_plus(&u);
    if !cubic_holds {
        return Err(BraidError::RelationFailed(format!(
            "image does not satisfy (s + {u})(s^2 - 1) = 0"
        )));
    }
    Ok(Transport {
        rep: out,
        u,
        cubic_holds,
    })
}

/// The subsystem `(W_J, J)` as its own Coxeter system, with generator `k`
/// standing for `J[k]`.
pub fn parabolic_system(system: &CoxeterSystem, j: GenSet) -> Result<CoxeterSystem, CoxeterError> {
    let members = genset_members(j, system.rank());
    let matrix = members
        .iter()
        .map(|&a| members.iter().map(|&b| system.m(a, b)).collect())
        .collect();
    CoxeterSystem::new(matrix)
}

/// Restrict to the braid group of `W_J`, as a representation of
/// [`parabolic_system`].
pub fn restrict<F: Field>(
    rep: &BraidRepresentation<F>,
    sub: Arc<CoxeterSystem>,
    j: GenSet,
) -> Result<BraidRepresentation<F>, BraidError> {
    let members = genset_members(j, rep.system.rank());
    check_subsystem(&rep.system, &sub, &members)?;
    let gens = members.iter().map(|&s| rep.gens[s].clone()).collect();
    BraidRepresentation::new(sub, &rep.ctx, rep.dim, gens)
}

fn check_subsystem(
    system: &CoxeterSystem,
    sub: &CoxeterSystem,
    members: &[usize],
) -> Result<(), BraidError> {
    if sub.rank() != members.len() {
        return Err(BraidError::SystemMismatch(format!(
            "subsystem has rank {}, J has {} generators",
            sub.rank(),
            members.len()
        )));
    }
    for (a, &s) in members.iter().enumerate() {
        for (b, &t) in members.iter().enumerate() {
            if sub.m(a, b) != system.m(s, t) {
                return Err(BraidError::SystemMismatch(format!(
                    "m(s{}, s{}) differs",
                    s + 1,
                    t + 1
                )));
            }
        }
    }
    Ok(())
}

/// Induced representation on `⊕_{x ∈ W/W_J} V₀`.
///
/// Blocks are indexed by left cosets `x W_J` through their minimal
/// representatives `w`, in ShortLex order. The generator `s` sends block `w`
/// to block `s w W_J`: by `ρ₀(t)` when `w⁻¹ s w = t` lies in `W_J` (then `t`
/// is simple), by the identity otherwise.
pub fn induce<F: Field>(
    rep0: &BraidRepresentation<F>,
    system: Arc<CoxeterSystem>,
    j: GenSet,
) -> Result<InducedRep<F>, BraidError> {
    let members = genset_members(j, system.rank());
    check_subsystem(&system, &rep0.system, &members)?;
    let sub_index = |t: usize| members.iter().position(|&m| m == t);
    let cosets = system.left_cosets(j);
    let reps: Vec<GroupElement> = cosets.iter().map(|c| c[0]).collect();
    let mut block_of = vec![0usize; system.order()];
    for (b, c) in cosets.iter().enumerate() {
        for w in c {
            block_of[w.index()] = b;
        }
    }
    let d0 = rep0.dim;
    let nb = reps.len();
    let ctx = rep0.ctx.clone();
    let mut gens = Vec::with_capacity(system.rank());
    let mut targets = Vec::with_capacity(system.rank());
    for s in 0..system.rank() {
        let mut g = Matrix::zeros(&ctx, nb * d0, nb * d0);
        let mut tgt = Vec::with_capacity(nb);
        for (b, &w) in reps.iter().enumerate() {
            let conj = system.mul(system.mul(system.inv(w), system.gen(s)), w);
            let dest = block_of[system.gen_mul(s, w).index()];
            let block = if system.in_parabolic(j, conj) {
                let t = system.normal_form(conj);
                debug_assert_eq!(t.len(), 1, "Deodhar: conjugate is simple");
                rep0.gens[sub_index(t[0]).expect("letter of J")].clone()
            } else {
                Matrix::identity(&ctx, d0)
            };
            // Column block b (source) to row block dest (target).
            g.set_block(dest * d0, b * d0, &block);
            tgt.push(dest);
        }
        gens.push(g);
        targets.push(tgt);
    }
    let rep = BraidRepresentation::new(system, &ctx, nb * d0, gens)
        .map_err(|e| BraidError::ValidationFailed(format!("induced representation: {e}")))?;
    Ok(InducedRep {
        rep,
        coset_reps: reps,
        block_targets: targets,
    })
}

/// An induced representation with its block bookkeeping.
#[derive(Clone, Debug)]
pub struct InducedRep<F: Field> {
    pub rep: BraidRepresentation<F>,
    /// Minimal representatives of `W/W_J`, indexing the blocks.
    pub coset_reps: Vec<GroupElement>,
    /// `block_targets[s][b]` is the block that generator `s` sends block `b` to.
    pub block_targets: Vec<Vec<usize>>,
}

/// `τ(w) s² τ(w)⁻¹` for all `w ∈ W` and `s ∈ S`, ordered by `w` then `s`.
/// They generate the pure braid group.
pub fn pure_braid_generators(system: &CoxeterSystem) -> Vec<BraidWord> {
    let mut out = Vec::with_capacity(system.order() * system.rank());
    for w in system.elements() {
        let tw = BraidWord::positive(&system.normal_form(w));
        for s in 0..system.rank() {
            out.push(
                tw.concat(&BraidWord::positive(&[s, s]))
                    .concat(&tw.inverse()),
            );
        }
    }
    out
}

/// Regular representation of the Iwahori–Hecke algebra `H_q` on the basis
/// `(T_w)`, by left multiplication:
/// `T_s T_w = T_{sw}` if `ℓ(sw) > ℓ(w)`, else `(q − 1) T_w + q T_{sw}`.
pub fn hecke_regular<F: Field>(
    system: Arc<CoxeterSystem>,
    ctx: &F::Ctx,
    q: &F,
) -> Result<BraidRepresentation<F>, BraidError> {
    let n = system.order();
    let qm1 = q.sub(&F::one(ctx));
    let gens = (0..system.rank())
        .map(|s| {
            let mut g = Matrix::zeros(ctx, n, n);
            for w in system.elements() {
                let sw = system.gen_mul(s, w);
                if system.length(sw) > system.length(w) {
                    g.set(sw.index(), w.index(), F::one(ctx));
                } else {
                    g.set(w.index(), w.index(), qm1.clone());
                    g.set(sw.index(), w.index(), q.clone());
                }
            }
            g
        })
        .collect();
    BraidRepresentation::new(system, ctx, n, gens)
}

/// Two-dimensional representation of the braid group of type `A2`,
/// `s1 = [[a, 1], [0, b]]`, `s2 = [[b, 0], [−ab, a]]`, with eigenvalues
/// `a, b` for both generators.
pub fn a2_block<F: Field>(
    system: Arc<CoxeterSystem>,
    ctx: &F::Ctx,
    a: &F,
    b: &F,
) -> Result<BraidRepresentation<F>, BraidError> {
    let z = F::zero(ctx);
    let s1 = Matrix::from_rows(ctx, 2, vec![vec![a.clone(), F::one(ctx)], vec![z.clone(), b.clone()]])
        .expect("2x2");
    let s2 = Matrix::from_rows(ctx, 2, vec![vec![b.clone(), z], vec![a.mul(b).neg(), a.clone()]])
        .expect("2x2");
    BraidRepresentation::new(system, ctx, 2, vec![s1, s2])
}

/// Two-dimensional representation of the braid group of type `B2`,
/// `s1 = [[a, 0], [1, b]]`, `s2 = [[c, −ac − bd], [0, d]]`.
pub fn b2_block<F: Field>(
    system: Arc<CoxeterSystem>,
    ctx: &F::Ctx,
    a: &F,
    b: &F,
    c: &F,
    d: &F,
) -> Result<BraidRepresentation<F>, BraidError> {
    let z = F::zero(ctx);
    let s1 = Matrix::from_rows(ctx, 2, vec![vec![a.clone(), z.clone()], vec![F::one(ctx), b.clone()]])
        .expect("2x2");
    let off = a.mul(c).add(&b.mul(d)).neg();
    let s2 = Matrix::from_rows(ctx, 2, vec![vec![c.clone(), off], vec![z, d.clone()]]).expect("2x2");
    BraidRepresentation::new(system, ctx, 2, vec![s1, s2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, Q};

    fn a2() -> Arc<CoxeterSystem> {
        Arc::new(CoxeterSystem::a(2))
    }

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_i64_rows(&(), rows)
    }

    #[test]
    fn identity_generators_validate() {
        let sys = a2();
        let id: Matrix<Q> = Matrix::identity(&(), 2);
        let r = validate(&sys, 2, &[id.clone(), id]);
        assert!(r.ok());
    }

    #[test]
    fn swap_and_reflection_break_braid_relation() {
        let sys = a2();
        let r = validate(&sys, 2, &[m(&[&[0, 1], &[1, 0]]), m(&[&[1, 0], &[0, -1]])]);
        assert!(!r.ok());
        assert!(!r.relations[0].holds);
    }

    #[test]
    fn rank_one_accepts_any_invertible_matrix() {
        let sys = Arc::new(CoxeterSystem::a(1));
        assert!(BraidRepresentation::new(sys, &(), 2, vec![m(&[&[1, 5], &[3, 7]])]).is_ok());
    }

    #[test]
    fn word_action_and_tau() {
        let sys = a2();
        let rep = a2_block(sys.clone(), &(), &q(2), &q(-1)).unwrap();
        assert_eq!(rep.tau(sys.identity()), &rep.identity());
        let w = BraidWord::from_signed(&[1, -1]).unwrap();
        assert_eq!(rep.act(&w).unwrap(), rep.identity());
        assert!(rep.tau_is_well_defined(sys.w0(), None));
    }

    #[test]
    fn relation_checks_on_diagonal() {
        let sys = Arc::new(CoxeterSystem::a(1));
        let rep = BraidRepresentation::new(sys.clone(), &(), 2, vec![m(&[&[2, 0], &[0, -1]])]).unwrap();
        assert!(rep.check_cubic(&q(2)));
        assert!(rep.check_quadratic(&q(2)));
        let minus = BraidRepresentation::scalar(sys, &(), 1, &[q(-1)]).unwrap();
        assert!(minus.check_quadratic(&q(2)) && minus.check_cubic(&q(2)));
    }

    #[test]
    fn transport_diag() {
        let sys = Arc::new(CoxeterSystem::a(1));
        let rep = BraidRepresentation::new(sys, &(), 2, vec![m(&[&[2, 0], &[0, -1]])]).unwrap();
        let t = cubic_to_quadratic_transport(&rep, &q(2)).unwrap();
        assert_eq!(t.u, crate::exact::qf(1, 2));
        assert_eq!(
            t.rep.gen(0),
            &Matrix::from_rows(&(), 2, vec![vec![crate::exact::qf(-1, 2), q(0)], vec![q(0), q(1)]]).unwrap()
        );
    }

    #[test]
    fn central_element_rank_one() {
        let sys = Arc::new(CoxeterSystem::a(1));
        let g = m(&[&[1, 1], &[0, 2]]);
        let rep = BraidRepresentation::new(sys, &(), 2, vec![g.clone()]).unwrap();
        assert_eq!(rep.central_element(), g.mul(&g));
    }

    #[test]
    fn hecke_regular_satisfies_quadratic_relation() {
        let rep = hecke_regular(a2(), &(), &q(2)).unwrap();
        assert!(rep.check_quadratic(&q(2)));
        assert!(!rep.check_quadratic(&q(3)));
    }

    #[test]
    fn induce_from_one_dim() {
        let sys = a2();
        let j = crate::coxeter::genset(&[0]);
        let sub = Arc::new(parabolic_system(&sys, j).unwrap());
        let rep0 = BraidRepresentation::scalar(sub, &(), 1, &[q(2)]).unwrap();
        let ind = induce(&rep0, sys.clone(), j).unwrap();
        assert_eq!(ind.rep.dim(), 3);
        // Left cosets xW_J: {e, s1}, {s2, s2s1}, {s1s2, s1s2s1}.
        let words: Vec<String> = ind.coset_reps.iter().map(|&w| sys.format_element(w)).collect();
        assert_eq!(words, vec!["e", "2", "1.2"]);
        assert_eq!(ind.block_targets[0], vec![0, 2, 1]);
    }

    #[test]
    fn pure_braid_generator_count() {
        let sys = a2();
        let gens = pure_braid_generators(&sys);
        assert_eq!(gens.len(), 12);
        assert!(gens.iter().all(|g| g.image(&sys).unwrap() == sys.identity()));
    }
}
