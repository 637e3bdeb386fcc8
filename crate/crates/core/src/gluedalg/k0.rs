//! Grothendieck groups: classes of simple `Γ`-modules against the lattice
//! `K(Φ) = {(c_i) : φ_ij c_j − c_i ∈ K_ij for all i ≠ j}` in `⊕_i K_0(R_i)`.
//!
//! `φ_ij` is the matrix of `M_ij ⊗_{R_j} −` on classes of simples and
//! `K_ij` is spanned by the simple `R_i`-modules killed by the ideal
//! `ν_iji(M_ij ⊗ M_ji) ⊂ R_i`.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::lattice::IntVec;
use crate::exact::{Fp, IntegerLattice, Matrix, Q};

use super::algebra::{is_simple, multiplicities, simple_modules, simples_isomorphic, tensor_relations, Module, SimpleList};
use super::datum::{GluingAlgebra, GluingDatum};
use super::functors::{middle_extension, restrict};
use super::GlueError;

#[derive(Clone, Debug)]
pub struct K0Report {
    /// Dimensions of the simple `R_i`-modules, site by site.
    pub site_simple_dims: Vec<Vec<usize>>,
    /// Dimensions of the simple `Γ`-modules.
    pub simple_dims: Vec<usize>,
    /// Class of each simple `Γ`-module in `⊕_i ℤ^{#simples of R_i}`.
    pub classes: Vec<Vec<i64>>,
    /// `((i, j), φ_ij)` for `i ≠ j`, columns indexed by simples of `R_j`.
    pub phi: Vec<((usize, usize), Vec<Vec<i64>>)>,
    /// `((i, j), simples of R_i spanning K_ij)`.
    pub k_ij: Vec<((usize, usize), Vec<usize>)>,
    /// Hermite basis of `K(Φ)`.
    pub k_phi: Vec<IntVec>,
    /// Hermite basis of the span of the classes.
    pub image: Vec<IntVec>,
    pub equal: bool,
    /// The classes are linearly independent.
    pub injective: bool,
    /// `Σ dim S · [Γ : S] = dim Γ`.
    pub accounted: bool,
    /// Every `j_i^* S` is simple or zero.
    pub restriction_simple_or_zero: bool,
    /// Every simple is `j_{k,!*}` of its nonzero restrictions, and
    /// `j_{k,!*}` of every simple `R_k`-module is simple with `j_k^*`
    /// recovering it.
    pub middle_extension_roundtrip: bool,
}

impl K0Report {
    pub fn ok(&self) -> bool {
        self.equal
            && self.injective
            && self.accounted
            && self.restriction_simple_or_zero
            && self.middle_extension_roundtrip
    }
}

fn to_q(rows: &[Vec<i64>], ncols: usize) -> Matrix<Q> {
    Matrix::from_fn(&(), rows.len(), ncols, |r, c| Q::from_integer(BigInt::from(rows[r][c])))
}

/// Left `R_i`-module `M_ij ⊗_{R_j} T`.
fn tensor_with(ga: &GluingAlgebra, i: usize, j: usize, t: &Module) -> Module {
    let p = ga.prime();
    let m: Vec<usize> = ga.block(i, j).collect();
    let right: Vec<Matrix<Fp>> = ga.block(j, j).map(|b| ga.restricted_product(&m, &[b], &m)).collect();
    let rels = tensor_relations(p, &right, t.actions(), m.len(), t.dim());
    let id = Matrix::identity(&p, t.dim());
    let actions = ga
        .block(i, i)
        .map(|a| ga.restricted_product(&[a], &m, &m).kron(&id))
        .collect();
    Module::new(p, m.len() * t.dim(), actions).quotient(&rels)
}

/// `dim Tor_1^{R_j}(M_ij, R_j / rad R_j)`, zero exactly when `M_ij` is
/// projective as a right module.
fn tor_defect(ga: &GluingAlgebra, i: usize, j: usize, simples: &SimpleList) -> usize {
    let p = ga.prime();
    let rj = ga.site(j);
    let dj = rj.dim();
    // rad R_j: elements acting by zero on every simple.
    let mut rows = Vec::new();
    for s in &simples.simples {
        for r in 0..s.dim() {
            for c in 0..s.dim() {
                rows.push((0..dj).map(|b| s.action(b).get(r, c).clone()).collect::<Vec<Fp>>());
            }
        }
    }
    let rad = if rows.is_empty() {
        crate::exact::Subspace::full(&p, dj)
    } else {
        Matrix::from_rows(&p, dj, rows).expect("rows of length dim R_j").kernel()
    };
    if rad.is_zero() {
        return 0;
    }
    let rad_module = rj.regular_module().submodule(&rad);
    let m: Vec<usize> = ga.block(i, j).collect();
    let right: Vec<Matrix<Fp>> = ga.block(j, j).map(|b| ga.restricted_product(&m, &[b], &m)).collect();
    let rels = tensor_relations(p, &right, rad_module.actions(), m.len(), rad.dim());
    let tensor_dim = m.len() * rad.dim() - rels.dim();
    let mut mj = Vec::new();
    for r in rad.basis_vectors() {
        let mut act = Matrix::zeros(&p, m.len(), m.len());
        for (b, c) in r.iter().enumerate() {
            act = act.add(&right[b].scale(c));
        }
        mj.push(act);
    }
    let image_dim = if mj.is_empty() {
        0
    } else {
        let stacked = mj.iter().skip(1).fold(mj[0].clone(), |acc, a| acc.hstack(a));
        stacked.rank()
    };
    tensor_dim - image_dim
}

/// Verify that the classes of simple `Γ`-modules span `K(Φ)`.
pub fn k0_verify(datum: &GluingDatum, seed: u64, cap: usize) -> Result<K0Report, GlueError> {
    let ga = datum.assemble()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ga.n();
    let site_simples: Vec<SimpleList> = (0..n)
        .map(|i| simple_modules(ga.site(i), cap, &mut rng))
        .collect::<Result<_, _>>()?;
    let counts: Vec<usize> = site_simples.iter().map(|s| s.simples.len()).collect();
    let offsets: Vec<usize> = counts
        .iter()
        .scan(0, |acc, &c| {
            let o = *acc;
            *acc += c;
            Some(o)
        })
        .collect();
    let total: usize = counts.iter().sum();

    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            if ga.block_dim(i, j) > 0 && tor_defect(&ga, i, j, &site_simples[j]) > 0 {
                return Err(GlueError::DerivedCorrectionRequired { i, j });
            }
        }
    }

    let gamma = simple_modules(ga.algebra(), cap, &mut rng)?;
    let accounted = gamma.accounts_for(ga.algebra());

    let mut classes = Vec::new();
    let mut restriction_simple_or_zero = true;
    let mut middle_extension_roundtrip = true;
    for s in &gamma.simples {
        let mut class = vec![0i64; total];
        for i in 0..n {
            let r = restrict(&ga, s, i);
            let mult = multiplicities(ga.site(i), &r, &site_simples[i], &mut rng)?;
            for (t, m) in mult.iter().enumerate() {
                class[offsets[i] + t] = *m as i64;
            }
            if r.dim() > 0 {
                restriction_simple_or_zero &= is_simple(ga.site(i), &r, &mut rng)?;
                let me = middle_extension(&ga, i, &r);
                middle_extension_roundtrip &= simples_isomorphic(ga.algebra(), &me, s);
            }
        }
        classes.push(class);
    }
    for (k, list) in site_simples.iter().enumerate() {
        for t in &list.simples {
            let me = middle_extension(&ga, k, t);
            middle_extension_roundtrip &= is_simple(ga.algebra(), &me, &mut rng)?
                && simples_isomorphic(ga.site(k), &restrict(&ga, &me, k), t)
                && gamma.index_of(ga.algebra(), &me).is_some();
        }
    }

    let mut phi = Vec::new();
    let mut k_ij = Vec::new();
    let mut k_phi = IntegerLattice::full(total);
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let mut mat = vec![vec![0i64; counts[j]]; counts[i]];
            for (c, t) in site_simples[j].simples.iter().enumerate() {
                let m = tensor_with(&ga, i, j, t);
                for (r, v) in multiplicities(ga.site(i), &m, &site_simples[i], &mut rng)?.into_iter().enumerate() {
                    mat[r][c] = v as i64;
                }
            }
            // The ideal ν_iji(M_ij ⊗ M_ji) in R_i coordinates.
            let mij: Vec<usize> = ga.block(i, j).collect();
            let mji: Vec<usize> = ga.block(j, i).collect();
            let rii: Vec<usize> = ga.block(i, i).collect();
            let ideal = ga.restricted_product(&mij, &mji, &rii);
            let killed: Vec<usize> = site_simples[i]
                .simples
                .iter()
                .enumerate()
                .filter(|(_, t)| (0..ideal.ncols()).all(|c| t.act(&ideal.col(c)).is_zero()))
                .map(|(a, _)| a)
                .collect();
            let gens: Vec<IntVec> = killed
                .iter()
                .map(|&a| (0..counts[i]).map(|r| BigInt::from(i64::from(r == a))).collect())
                .collect();
            let kij = IntegerLattice::from_generators(counts[i], &gens)?;
            // c ↦ φ_ij c_j − c_i.
            let mut cond = vec![vec![0i64; total]; counts[i]];
            for r in 0..counts[i] {
                for c in 0..counts[j] {
                    cond[r][offsets[j] + c] += mat[r][c];
                }
                cond[r][offsets[i] + r] -= 1;
            }
            k_phi = k_phi.intersect(&kij.preimage(&to_q(&cond, total))?)?;
            phi.push(((i, j), mat));
            k_ij.push(((i, j), killed));
        }
    }

    let class_vecs: Vec<IntVec> = classes
        .iter()
        .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let image = IntegerLattice::from_generators(total, &class_vecs)?;
    let equal = image.contains_lattice(&k_phi)? && k_phi.contains_lattice(&image)?;
    let injective = image.rank() == gamma.simples.len();

    Ok(K0Report {
        site_simple_dims: site_simples
            .iter()
            .map(|l| l.simples.iter().map(Module::dim).collect())
            .collect(),
        simple_dims: gamma.simples.iter().map(Module::dim).collect(),
        classes,
        phi,
        k_ij,
        k_phi: k_phi.basis().to_vec(),
        image: image.basis().to_vec(),
        equal,
        injective,
        accounted,
        restriction_simple_or_zero,
        middle_extension_roundtrip,
    })
}
