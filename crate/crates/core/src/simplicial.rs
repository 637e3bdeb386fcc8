//! Coefficient systems on the simplex with vertex set `[0, n)` and their
//! chain complexes.
//!
//! A face is a nonempty subset `J`, stored as a bitmask. The system assigns
//! a vector space `B(J)` to every subset (including the empty one) and a map
//! `B(K) → B(J)` to every inclusion `J ⊂ K`. Only the maps for `|K − J| = 1`
//! are stored; longer inclusions compose along any chain of faces, which is
//! unambiguous once the squares commute.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact::{Field, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("incoherent coefficient system: {0}")]
    IncoherentSystem(String),
    #[error("boundary maps do not compose to zero in degree {0}")]
    NotAComplex(i64),
}

type Subset = u32;

fn members(j: Subset) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| j & (1 << i) != 0)
}

#[derive(Clone, Debug)]
pub struct CoefficientSystem<F: Field> {
    n: usize,
    ctx: F::Ctx,
    dims: Vec<usize>,
    /// `faces[(K, i)]` is the map `B(K) → B(K − {i})`.
    faces: BTreeMap<(Subset, usize), Matrix<F>>,
}

impl<F: Field> CoefficientSystem<F> {
    /// `face(K, i)` must return a `dims[K − i] × dims[K]` matrix.
    pub fn new(
        ctx: &F::Ctx,
        n: usize,
        dims: Vec<usize>,
        mut face: impl FnMut(Subset, usize) -> Matrix<F>,
    ) -> Result<Self, SimplicialError> {
        if dims.len() != 1 << n {
            return Err(SimplicialError::IncoherentSystem(format!(
                "expected {} dimensions, got {}",
                1usize << n,
                dims.len()
            )));
        }
        let mut faces = BTreeMap::new();
        for k in 0..(1u32 << n) {
            for i in members(k) {
                let j = k & !(1 << i);
                let m = face(k, i);
                if m.nrows() != dims[j as usize] || m.ncols() != dims[k as usize] {
                    return Err(SimplicialError::IncoherentSystem(format!(
                        "map for removing {i} from {k:#b} is {}x{}, expected {}x{}",
                        m.nrows(),
                        m.ncols(),
                        dims[j as usize],
                        dims[k as usize]
                    )));
                }
                faces.insert((k, i), m);
            }
        }
        let sys = CoefficientSystem {
            n,
            ctx: ctx.clone(),
            dims,
            faces,
        };
        sys.check_coherent()?;
        Ok(sys)
    }

    /// `B(J) = F^dim` for every `J`, all maps the identity.
    pub fn constant(ctx: &F::Ctx, n: usize, dim: usize) -> Self {
        Self::new(ctx, n, vec![dim; 1 << n], |_, _| Matrix::identity(ctx, dim))
            .expect("constant system is coherent")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self, j: Subset) -> usize {
        self.dims[j as usize]
    }

    pub fn face(&self, k: Subset, i: usize) -> &Matrix<F> {
        &self.faces[&(k, i)]
    }

    /// The map `B(K) → B(J)` for `J ⊂ K`, removing the extra vertices in
    /// increasing order.
    pub fn transition(&self, k: Subset, j: Subset) -> Option<Matrix<F>> {
        if j & !k != 0 {
            return None;
        }
        let mut acc = Matrix::identity(&self.ctx, self.dim(k));
        let mut cur = k;
        for i in members(k & !j) {
            acc = self.face(cur, i).mul(&acc);
            cur &= !(1 << i);
        }
        Some(acc)
    }

    /// Removing `a` then `b` agrees with removing `b` then `a`.
    fn check_coherent(&self) -> Result<(), SimplicialError> {
        for k in 0..(1u32 << self.n) {
            for a in members(k) {
                for b in members(k).filter(|&b| b > a) {
                    let ab = self.face(k & !(1 << a), b).mul(self.face(k, a));
                    let ba = self.face(k & !(1 << b), a).mul(self.face(k, b));
                    if ab != ba {
                        return Err(SimplicialError::IncoherentSystem(format!(
                            "removing {a} and {b} from {k:#b} depends on the order"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `B(J) = ⊕_{t ∈ T(J)} F^{dims[t]}` with
/// `T(J) = ⋂_{j ∈ J} T¹_j ∩ ⋂_{j ∉ J} T²_j`; a transition projects onto the
/// common summands and embeds them.
///
/// `t1[i]` and `t2[i]` are bitmasks over `T = [0, dims.len())`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomlemInstance {
    pub n: usize,
    pub t1: Vec<u64>,
    pub t2: Vec<u64>,
    pub dims: Vec<usize>,
}

impl HomlemInstance {
    pub fn t_of(&self, j: Subset) -> u64 {
        let all = if self.dims.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.dims.len()) - 1
        };
        (0..self.n).fold(all, |acc, i| {
            acc & if j & (1 << i) != 0 { self.t1[i] } else { self.t2[i] }
        })
    }

    /// `I¹(t) = {i : t ∈ T¹_i}`.
    pub fn i1(&self, t: usize) -> Subset {
        (0..self.n)
            .filter(|&i| self.t1[i] >> t & 1 == 1)
            .fold(0, |acc, i| acc | 1 << i)
    }

    /// `I²(t) = {i : t ∉ T²_i}`.
    pub fn i2(&self, t: usize) -> Subset {
        (0..self.n)
            .filter(|&i| self.t2[i] >> t & 1 == 0)
            .fold(0, |acc, i| acc | 1 << i)
    }

    /// Every `t` has `I¹(t) ≠ I²(t)`.
    pub fn hypothesis_holds(&self) -> bool {
        (0..self.dims.len()).all(|t| self.i1(t) != self.i2(t))
    }

    pub fn dim_of(&self, j: Subset) -> usize {
        let tj = self.t_of(j);
        (0..self.dims.len())
            .filter(|&t| tj >> t & 1 == 1)
            .map(|t| self.dims[t])
            .sum()
    }
}

fn offsets(inst: &HomlemInstance, set: u64) -> Vec<Option<usize>> {
    let mut off = 0;
    (0..inst.dims.len())
        .map(|t| {
            if set >> t & 1 == 1 {
                let o = off;
                off += inst.dims[t];
                Some(o)
            } else {
                None
            }
        })
        .collect()
}

pub fn build_homlem_instance<F: Field>(ctx: &F::Ctx, inst: &HomlemInstance) -> CoefficientSystem<F> {
    let n = inst.n;
    let dims: Vec<usize> = (0..(1u32 << n)).map(|j| inst.dim_of(j)).collect();
    CoefficientSystem::new(ctx, n, dims.clone(), |k, i| {
        let j = k & !(1 << i);
        let (tk, tj) = (inst.t_of(k), inst.t_of(j));
        let (ok, oj) = (offsets(inst, tk), offsets(inst, tj));
        let mut m = Matrix::zeros(ctx, dims[j as usize], dims[k as usize]);
        for t in 0..inst.dims.len() {
            if let (Some(a), Some(b)) = (oj[t], ok[t]) {
                m.set_block(a, b, &Matrix::identity(ctx, inst.dims[t]));
            }
        }
        m
    })
    .expect("projection-then-embedding maps are coherent")
}

/// A bounded chain complex `C_top → ⋯ → C_low`.
#[derive(Clone, Debug)]
pub struct ChainComplex<F: Field> {
    /// Degree of `dims[0]`.
    pub lowest: i64,
    pub dims: Vec<usize>,
    /// `boundaries[k] : C_{lowest+k+1} → C_{lowest+k}`.
    pub boundaries: Vec<Matrix<F>>,
}

impl<F: Field> ChainComplex<F> {
    pub fn check(&self) -> Result<(), SimplicialError> {
        for k in 1..self.boundaries.len() {
            if !self.boundaries[k - 1].mul(&self.boundaries[k]).is_zero() {
                return Err(SimplicialError::NotAComplex(self.lowest + k as i64));
            }
        }
        Ok(())
    }

    /// `dim H_p` for `p = lowest, lowest + 1, …`.
    pub fn homology(&self) -> Vec<usize> {
        let rank = |k: usize| self.boundaries.get(k).map_or(0, |b| b.rank());
        (0..self.dims.len())
            .map(|k| {
                let outgoing = if k == 0 { 0 } else { rank(k - 1) };
                self.dims[k] - outgoing - rank(k)
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| sign(self.lowest + k as i64) * d as i64)
            .sum()
    }
}

fn sign(p: i64) -> i64 {
    if p.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Faces `J` with `|J| = p + 1` sit in degree `p`. With `include_empty` the
/// term `B(∅)` is attached in degree `−1`. The boundary of
/// `J = {i_0 < ⋯ < i_p}` is `Σ_k (−1)^k B(J → J − i_k)`.
pub fn chain_complex<F: Field>(
    sys: &CoefficientSystem<F>,
    include_empty: bool,
) -> Result<ChainComplex<F>, SimplicialError> {
    let n = sys.n;
    let min_size = if include_empty { 0 } else { 1 };
    let mut by_size: Vec<Vec<Subset>> = vec![Vec::new(); n + 1];
    for j in 0..(1u32 << n) {
        by_size[j.count_ones() as usize].push(j);
    }
    let sizes: Vec<usize> = (min_size..=n).collect();
    let offsets: Vec<BTreeMap<Subset, usize>> = sizes
        .iter()
        .map(|&s| {
            let mut off = 0;
            by_size[s]
                .iter()
                .map(|&j| {
                    let o = off;
                    off += sys.dim(j);
                    (j, o)
                })
                .collect()
        })
        .collect();
    let dims: Vec<usize> = sizes
        .iter()
        .map(|&s| by_size[s].iter().map(|&j| sys.dim(j)).sum())
        .collect();
    let mut boundaries = Vec::new();
    for k in 1..sizes.len() {
        let mut d = Matrix::zeros(&sys.ctx, dims[k - 1], dims[k]);
        for &j in &by_size[sizes[k]] {
            for (pos, i) in members(j).enumerate() {
                let face = j & !(1 << i);
                let m = sys.face(j, i);
                let m = if pos % 2 == 0 { m.clone() } else { m.neg() };
                d.set_block(offsets[k - 1][&face], offsets[k][&j], &m);
            }
        }
        boundaries.push(d);
    }
    let cx = ChainComplex {
        lowest: if include_empty { -1 } else { 0 },
        dims,
        boundaries,
    };
    cx.check()?;
    Ok(cx)
}

/// The conclusion for one instance: higher homology vanishes and
/// `dim H_0 = dim B(∅)`.
pub fn homlem_conclusion_holds<F: Field>(ctx: &F::Ctx, inst: &HomlemInstance) -> bool {
    let sys = build_homlem_instance::<F>(ctx, inst);
    let cx = chain_complex(&sys, false).expect("coherent by construction");
    let h = cx.homology();
    let h0 = h.first().copied().unwrap_or(0);
    h0 == inst.dim_of(0) && h.iter().skip(1).all(|&x| x == 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzReport {
    pub seed: u64,
    pub instances: usize,
    pub confirmed: usize,
    /// Instances with the hypothesis deliberately broken (`|I¹(t)| ≥ 2`).
    pub negative_controls: usize,
    /// Negative controls whose higher homology is nonzero.
    pub negative_detected: usize,
    pub first_failure: Option<HomlemInstance>,
}

impl FuzzReport {
    pub fn ok(&self) -> bool {
        self.confirmed == self.instances && (self.negative_controls == 0 || self.negative_detected > 0)
    }
}

/// Largest `n`, `|T|` and multiplicity drawn by [`random_instance`].
pub const FUZZ_MAX_N: usize = 4;
pub const FUZZ_MAX_T: usize = 6;
pub const FUZZ_MAX_DIM: usize = 3;

/// A random instance; with `enforce` every `t` with `I¹(t) = I²(t)` has one
/// `T²` membership flipped.
pub fn random_instance(rng: &mut impl Rng, enforce: bool) -> HomlemInstance {
    let n = rng.gen_range(1..=FUZZ_MAX_N);
    let size = rng.gen_range(0..=FUZZ_MAX_T);
    let mask = (1u64 << size) - 1;
    let mut inst = HomlemInstance {
        n,
        t1: (0..n).map(|_| rng.gen::<u64>() & mask).collect(),
        t2: (0..n).map(|_| rng.gen::<u64>() & mask).collect(),
        dims: (0..size).map(|_| rng.gen_range(0..=FUZZ_MAX_DIM)).collect(),
    };
    if enforce {
        for t in 0..size {
            if inst.i1(t) == inst.i2(t) {
                let i = rng.gen_range(0..n);
                inst.t2[i] ^= 1 << t;
            }
        }
    }
    inst
}

/// Replace one element by a `t` with `I¹(t) = I²(t) = I`, `|I| ≥ 2`,
/// `dims[t] ≥ 1`. Needs `n ≥ 2`.
fn break_hypothesis(rng: &mut impl Rng, inst: &mut HomlemInstance) {
    if inst.dims.is_empty() {
        inst.dims.push(1);
    }
    let t = rng.gen_range(0..inst.dims.len());
    inst.dims[t] = inst.dims[t].max(1);
    let mut set: Subset = 0;
    while set.count_ones() < 2 {
        set |= 1 << rng.gen_range(0..inst.n);
    }
    for i in 0..inst.n {
        let inside = set & (1 << i) != 0;
        inst.t1[i] = if inside { inst.t1[i] | 1 << t } else { inst.t1[i] & !(1 << t) };
        inst.t2[i] = if inside { inst.t2[i] & !(1 << t) } else { inst.t2[i] | 1 << t };
    }
}

/// `count` instances with the hypothesis enforced, then `negatives`
/// instances with it broken.
pub fn homlem_fuzz<F: Field>(ctx: &F::Ctx, seed: u64, count: usize, negatives: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut confirmed = 0;
    let mut first_failure = None;
    for _ in 0..count {
        let inst = random_instance(&mut rng, true);
        debug_assert!(inst.hypothesis_holds());
        if homlem_conclusion_holds::<F>(ctx, &inst) {
            confirmed += 1;
        } else if first_failure.is_none() {
            first_failure = Some(inst);
        }
    }
    let mut negative_detected = 0;
    for _ in 0..negatives {
        let mut inst = random_instance(&mut rng, false);
        if inst.n < 2 {
            inst.n = 2;
            inst.t1.resize(2, 0);
            inst.t2.resize(2, 0);
        }
        break_hypothesis(&mut rng, &mut inst);
        let sys = build_homlem_instance::<F>(ctx, &inst);
        let h = chain_complex(&sys, false).expect("coherent").homology();
        if h.iter().skip(1).any(|&x| x > 0) {
            negative_detected += 1;
        }
    }
    FuzzReport {
        seed,
        instances: count,
        confirmed,
        negative_controls: negatives,
        negative_detected,
        first_failure,
    }
}
