//! Gluing data, their file format, and the assembled algebra `Γ`.
//!
//! Conventions for the structure tensors (all entries are integers read
//! modulo `prime`):
//! - `Site::mult[a][b]` is the coordinate vector of `r_a r_b`.
//! - `Bimodule::left[a]` is the matrix of `m ↦ r_a m` for `r_a ∈ R_i`, and
//!   `Bimodule::right[b]` the matrix of `m ↦ m r_b` for `r_b ∈ R_j`; both are
//!   lists of rows.
//! - `Composition::table[x][y]` is `ν_ijk(m_x ⊗ m_y)` in `M_ik` (in `R_i`
//!   when `i = k`).
//!
//! Missing bimodules are zero and missing compositions are the zero map.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::exact::fp::is_prime;
use crate::exact::{Fp, Matrix, Ring};

use super::algebra::{fp_vec, tensor_relations, Algebra, Vector};
use super::GlueError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Site {
    pub dim: usize,
    pub unit: Vec<i64>,
    pub mult: Vec<Vec<Vec<i64>>>,
}

impl Site {
    /// The ground field as a one-dimensional site.
    pub fn field() -> Self {
        Site {
            dim: 1,
            unit: vec![1],
            mult: vec![vec![vec![1]]],
        }
    }

    /// `k^n` with orthogonal idempotents as basis.
    pub fn split(n: usize) -> Self {
        let e = |i: usize| (0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>();
        Site {
            dim: n,
            unit: vec![1; n],
            mult: (0..n)
                .map(|a| (0..n).map(|b| if a == b { e(a) } else { vec![0; n] }).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bimodule {
    pub i: usize,
    pub j: usize,
    pub dim: usize,
    pub left: Vec<Vec<Vec<i64>>>,
    pub right: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Composition {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub table: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingDatum {
    pub prime: u64,
    pub sites: Vec<Site>,
    #[serde(default)]
    pub bimodules: Vec<Bimodule>,
    #[serde(default)]
    pub compositions: Vec<Composition>,
    /// Type label of `W` when sites are indexed by group elements in
    /// ShortLex order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coxeter: Option<String>,
}

fn identity_rows(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|k| i64::from(i == k)).collect()).collect()
}

impl GluingDatum {
    pub fn n(&self) -> usize {
        self.sites.len()
    }

    fn bimodule(&self, i: usize, j: usize) -> Option<&Bimodule> {
        self.bimodules.iter().find(|b| b.i == i && b.j == j)
    }

    /// `dim M_ij`, with `M_ii = R_i`.
    pub fn block_dim(&self, i: usize, j: usize) -> usize {
        if i == j {
            self.sites[i].dim
        } else {
            self.bimodule(i, j).map_or(0, |b| b.dim)
        }
    }

    fn validate(&self) -> Result<(), GlueError> {
        let bad = |m: String| Err(GlueError::Shape(m));
        if !is_prime(self.prime) {
            return Err(GlueError::NotPrime { p: self.prime });
        }
        let n = self.n();
        if n == 0 {
            return bad("no sites".into());
        }
        let is_matrix = |m: &Vec<Vec<i64>>, r: usize, c: usize| m.len() == r && m.iter().all(|row| row.len() == c);
        for (i, s) in self.sites.iter().enumerate() {
            if s.unit.len() != s.dim || s.mult.len() != s.dim || !s.mult.iter().all(|row| is_matrix(row, s.dim, s.dim)) {
                return bad(format!("site {i} structure constants have the wrong shape"));
            }
        }
        let mut seen = BTreeMap::new();
        for b in &self.bimodules {
            if b.i >= n || b.j >= n || b.i == b.j {
                return bad(format!("bimodule ({},{}) has bad indices", b.i, b.j));
            }
            if seen.insert((b.i, b.j), ()).is_some() {
                return bad(format!("bimodule ({},{}) given twice", b.i, b.j));
            }
            if b.left.len() != self.sites[b.i].dim || !b.left.iter().all(|m| is_matrix(m, b.dim, b.dim)) {
                return bad(format!("left action on M_{}{} has the wrong shape", b.i, b.j));
            }
            if b.right.len() != self.sites[b.j].dim || !b.right.iter().all(|m| is_matrix(m, b.dim, b.dim)) {
                return bad(format!("right action on M_{}{} has the wrong shape", b.i, b.j));
            }
        }
        let mut seen = BTreeMap::new();
        for c in &self.compositions {
            if c.i >= n || c.j >= n || c.k >= n || c.i == c.j || c.j == c.k {
                return bad(format!("composition ({},{},{}) has bad indices", c.i, c.j, c.k));
            }
            if seen.insert((c.i, c.j, c.k), ()).is_some() {
                return bad(format!("composition ({},{},{}) given twice", c.i, c.j, c.k));
            }
            let (dx, dy, dz) = (self.block_dim(c.i, c.j), self.block_dim(c.j, c.k), self.block_dim(c.i, c.k));
            if c.table.len() != dx || c.table.iter().any(|row| row.len() != dy || row.iter().any(|v| v.len() != dz))
            {
                return bad(format!("composition ({},{},{}) has the wrong shape", c.i, c.j, c.k));
            }
        }
        Ok(())
    }

    /// The algebra `R_i`.
    pub fn site_algebra(&self, i: usize) -> Result<Algebra, GlueError> {
        let p = self.prime;
        let s = &self.sites[i];
        Algebra::from_product(
            p,
            s.dim,
            fp_vec(p, &s.unit),
            |a, b| fp_vec(p, &s.mult[a][b]),
            |_, _, _| GlueError::AssociativityFailure { i, j: i, k: i, l: i },
        )
    }

    /// `Γ` with its block decomposition. Associativity is checked on all
    /// basis triples.
    pub fn assemble(&self) -> Result<GluingAlgebra, GlueError> {
        self.validate()?;
        let p = self.prime;
        let n = self.n();
        let mut blocks = Vec::new();
        let mut offset = vec![vec![0; n]; n];
        let mut dim = 0;
        for i in 0..n {
            for j in 0..n {
                offset[i][j] = dim;
                let d = self.block_dim(i, j);
                blocks.extend((0..d).map(|x| (i, j, x)));
                dim += d;
            }
        }
        let comps: BTreeMap<(usize, usize, usize), &Composition> =
            self.compositions.iter().map(|c| ((c.i, c.j, c.k), c)).collect();
        let zero = Fp::zero(&p);
        let product = |g: usize, h: usize| -> Vector {
            let (i, j, x) = blocks[g];
            let (j2, k, y) = blocks[h];
            let mut out = vec![zero.clone(); dim];
            if j != j2 {
                return out;
            }
            let coords: Vec<i64> = if i == j && j == k {
                self.sites[i].mult[x][y].clone()
            } else if i == j {
                let b = self.bimodule(j, k).expect("nonempty block");
                b.left[x].iter().map(|row| row[y]).collect()
            } else if j == k {
                let b = self.bimodule(i, j).expect("nonempty block");
                b.right[y].iter().map(|row| row[x]).collect()
            } else {
                match comps.get(&(i, j, k)) {
                    Some(c) => c.table[x][y].clone(),
                    None => vec![0; self.block_dim(i, k)],
                }
            };
            for (t, v) in coords.into_iter().enumerate() {
                out[offset[i][k] + t] = Fp::new(v, p);
            }
            out
        };
        let mut unit = vec![zero.clone(); dim];
        for i in 0..n {
            for (t, &v) in self.sites[i].unit.iter().enumerate() {
                unit[offset[i][i] + t] = Fp::new(v, p);
            }
        }
        let alg = Algebra::from_product(p, dim, unit, product, |a, b, c| GlueError::AssociativityFailure {
            i: blocks[a].0,
            j: blocks[a].1,
            k: blocks[b].1,
            l: blocks[c].1,
        })?;
        let sites = (0..n).map(|i| self.site_algebra(i)).collect::<Result<Vec<_>, _>>()?;
        Ok(GluingAlgebra {
            n,
            alg,
            offset,
            block_dims: (0..n).map(|i| (0..n).map(|j| self.block_dim(i, j)).collect()).collect(),
            sites,
        })
    }

    /// For sites indexed by `W`: `ν_{w,w'}` is bijective from the balanced
    /// tensor product whenever `ℓ(ww') = ℓ(w) + ℓ(w')`.
    pub fn check_w_gluing(&self, sys: &CoxeterSystem) -> Result<WGluingReport, GlueError> {
        if self.n() != sys.order() {
            return Err(GlueError::NotWGluing(format!("{} sites for a group of order {}", self.n(), sys.order())));
        }
        let ga = self.assemble()?;
        let p = self.prime;
        let mut checked = 0;
        let mut failures = Vec::new();
        for x in sys.elements() {
            for w in sys.elements().filter(|&w| w != sys.identity()) {
                for w2 in sys.elements().filter(|&w2| w2 != sys.identity()) {
                    if !sys.is_length_additive(w, w2) {
                        continue;
                    }
                    let k = x.index();
                    let j = sys.mul(w2, x).index();
                    let i = sys.mul(sys.mul(w, w2), x).index();
                    checked += 1;
                    if !ga.composition_bijective(p, i, j, k) {
                        failures.push((w, w2, x));
                    }
                }
            }
        }
        Ok(WGluingReport { checked, failures })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WGluingReport {
    pub checked: usize,
    /// `(w, w', x)` for which `ν_{w,w'}` fails to be bijective at site `x`.
    pub failures: Vec<(GroupElement, GroupElement, GroupElement)>,
}

impl WGluingReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The assembled algebra `Γ`, its blocks and its site algebras.
#[derive(Clone, Debug)]
pub struct GluingAlgebra {
    n: usize,
    alg: Algebra,
    offset: Vec<Vec<usize>>,
    block_dims: Vec<Vec<usize>>,
    sites: Vec<Algebra>,
}

impl GluingAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn prime(&self) -> u64 {
        self.alg.prime()
    }

    pub fn site(&self, i: usize) -> &Algebra {
        &self.sites[i]
    }

    pub fn block_dim(&self, i: usize, j: usize) -> usize {
        self.block_dims[i][j]
    }

    /// Basis indices of `Γ` spanning `e_i Γ e_j`.
    pub fn block(&self, i: usize, j: usize) -> std::ops::Range<usize> {
        let o = self.offset[i][j];
        o..o + self.block_dims[i][j]
    }

    /// Basis indices of `Γ e_k` (column `k`).
    pub fn column_indices(&self, k: usize) -> Vec<usize> {
        (0..self.n).flat_map(|i| self.block(i, k)).collect()
    }

    /// Basis indices of `e_k Γ` (row `k`).
    pub fn row_indices(&self, k: usize) -> Vec<usize> {
        (0..self.n).flat_map(|j| self.block(k, j)).collect()
    }

    pub fn idempotent(&self, i: usize) -> Vector {
        let p = self.prime();
        let mut v = vec![Fp::zero(&p); self.dim()];
        for (t, c) in self.sites[i].unit().iter().enumerate() {
            v[self.offset[i][i] + t] = c.clone();
        }
        v
    }

    /// Product of two basis elements of `Γ`, as coordinates.
    pub fn basis_product(&self, g: usize, h: usize) -> Vector {
        self.alg.left(g).col(h)
    }

    /// Matrix of `(a, b) ↦ a·b` for `a` in `idx_a`, `b` in `idx_b`, written
    /// in the coordinates `idx_out`: column `(x, y)` with index `x·|b| + y`.
    pub(crate) fn restricted_product(&self, idx_a: &[usize], idx_b: &[usize], idx_out: &[usize]) -> Matrix<Fp> {
        let p = self.prime();
        let mut m = Matrix::zeros(&p, idx_out.len(), idx_a.len() * idx_b.len());
        for (x, &g) in idx_a.iter().enumerate() {
            for (y, &h) in idx_b.iter().enumerate() {
                let v = self.basis_product(g, h);
                for (r, &o) in idx_out.iter().enumerate() {
                    m.set(r, x * idx_b.len() + y, v[o].clone());
                }
            }
        }
        m
    }

    /// `M_ij ⊗_{R_j} M_jk → M_ik` is bijective (`M_ii = R_i`).
    pub fn composition_bijective(&self, p: u64, i: usize, j: usize, k: usize) -> bool {
        let (a, b, out): (Vec<usize>, Vec<usize>, Vec<usize>) =
            (self.block(i, j).collect(), self.block(j, k).collect(), self.block(i, k).collect());
        let rj: Vec<usize> = self.block(j, j).collect();
        // Right R_j action on M_ij and left action on M_jk.
        let right: Vec<Matrix<Fp>> = rj
            .iter()
            .map(|&r| self.restricted_product(&a, &[r], &a))
            .collect();
        let left: Vec<Matrix<Fp>> = rj
            .iter()
            .map(|&r| self.restricted_product(&[r], &b, &b))
            .collect();
        let rels = tensor_relations(p, &right, &left, a.len(), b.len());
        let map = self.restricted_product(&a, &b, &out);
        let tensor_dim = a.len() * b.len() - rels.dim();
        // The map kills the relations (associativity), so it factors through
        // the quotient; bijective iff the ranks line up.
        tensor_dim == out.len() && map.rank() == out.len() && rels.is_subspace_of(&map.kernel()).unwrap_or(false)
    }
}

fn one_dim_bimodule(i: usize, j: usize) -> Bimodule {
    Bimodule {
        i,
        j,
        dim: 1,
        left: vec![identity_rows(1)],
        right: vec![identity_rows(1)],
    }
}

fn scalar_composition(i: usize, j: usize, k: usize, c: i64) -> Composition {
    Composition {
        i,
        j,
        k,
        table: vec![vec![vec![c]]],
    }
}

/// Three sites `k × k`, `k`, `k` and no bimodules: `Γ` is the product.
pub fn product_datum(p: u64) -> GluingDatum {
    GluingDatum {
        prime: p,
        sites: vec![Site::split(2), Site::field(), Site::field()],
        bimodules: Vec::new(),
        compositions: Vec::new(),
        coxeter: None,
    }
}

/// `R_0 = R_1 = k`, `M_01 = k`, `M_10 = 0`: upper triangular matrices.
pub fn triangular_datum(p: u64) -> GluingDatum {
    GluingDatum {
        prime: p,
        sites: vec![Site::field(), Site::field()],
        bimodules: vec![one_dim_bimodule(0, 1)],
        compositions: Vec::new(),
        coxeter: None,
    }
}

/// `R_0 = k × k`, `R_1 = k`, `M_01 = k` on which the first idempotent of
/// `R_0` acts by one, `M_10 = k` with the same idempotent acting on the
/// right, and both compositions equal to `c`.
pub fn two_site_datum(p: u64, c: i64) -> GluingDatum {
    GluingDatum {
        prime: p,
        sites: vec![Site::split(2), Site::field()],
        bimodules: vec![
            Bimodule {
                i: 0,
                j: 1,
                dim: 1,
                left: vec![vec![vec![1]], vec![vec![0]]],
                right: vec![identity_rows(1)],
            },
            Bimodule {
                i: 1,
                j: 0,
                dim: 1,
                left: vec![identity_rows(1)],
                right: vec![vec![vec![1]], vec![vec![0]]],
            },
        ],
        compositions: vec![
            Composition {
                i: 0,
                j: 1,
                k: 0,
                table: vec![vec![vec![c, 0]]],
            },
            scalar_composition(1, 0, 1, c),
        ],
        coxeter: None,
    }
}

/// Two one-dimensional sites with `M_01 = M_10 = k` and compositions `a`
/// and `b`; associative exactly when `a = b`.
pub fn scalar_pair_datum(p: u64, a: i64, b: i64) -> GluingDatum {
    GluingDatum {
        prime: p,
        sites: vec![Site::field(), Site::field()],
        bimodules: vec![one_dim_bimodule(0, 1), one_dim_bimodule(1, 0)],
        compositions: vec![scalar_composition(0, 1, 0, a), scalar_composition(1, 0, 1, b)],
        coxeter: None,
    }
}

/// Whether the reflection `r` separates `a` from `b`: exactly one of
/// `a r`, `b r` is shorter than `a`, `b` respectively.
fn separates(sys: &CoxeterSystem, r: GroupElement, a: GroupElement, b: GroupElement) -> bool {
    let below = |x: GroupElement| sys.length(sys.mul(x, r)) < sys.length(x);
    below(a) != below(b)
}

/// A W-gluing with every site `k` and every `M_{x,y} = k`. The composition
/// `(x, y, z)` is multiplication by zero when the path `x → y → z` crosses
/// one of the `walls` (reflections) and comes back, and by one otherwise.
/// With no walls `Γ` is the full matrix algebra on `W`.
pub fn bounce_datum(sys: &CoxeterSystem, p: u64, walls: &[GroupElement]) -> GluingDatum {
    let n = sys.order();
    let els: Vec<GroupElement> = sys.elements().collect();
    let mut bimodules = Vec::new();
    let mut compositions = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                bimodules.push(one_dim_bimodule(i, j));
            }
        }
    }
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for k in (0..n).filter(|&k| k != j) {
                let bounces = walls.iter().any(|&r| {
                    separates(sys, r, els[i], els[j])
                        && separates(sys, r, els[j], els[k])
                        && !separates(sys, r, els[i], els[k])
                });
                compositions.push(scalar_composition(i, j, k, i64::from(!bounces)));
            }
        }
    }
    GluingDatum {
        prime: p,
        sites: vec![Site::field(); n],
        bimodules,
        compositions,
        coxeter: sys.label().map(str::to_owned),
    }
}

/// Names accepted by [`builtin`].
pub fn builtin_names() -> &'static [&'static str] {
    &[
        "product",
        "triangular",
        "two-site",
        "two-site-zero",
        "matrix",
        "nonassociative",
        "full-A1",
        "full-A2",
        "bounce-A1",
        "bounce-A2",
    ]
}

/// A shipped datum over `F_p`.
pub fn builtin(name: &str, p: u64) -> Result<GluingDatum, GlueError> {
    let a1 = || CoxeterSystem::from_label("A1");
    let a2 = || CoxeterSystem::from_label("A2");
    Ok(match name {
        "product" => product_datum(p),
        "triangular" => triangular_datum(p),
        "two-site" => two_site_datum(p, 1),
        "two-site-zero" => two_site_datum(p, 0),
        "matrix" => scalar_pair_datum(p, 1, 1),
        "nonassociative" => scalar_pair_datum(p, 1, 2),
        "full-A1" => bounce_datum(&a1()?, p, &[]),
        "full-A2" => bounce_datum(&a2()?, p, &[]),
        "bounce-A1" => {
            let sys = a1()?;
            let wall = sys.gen(0);
            bounce_datum(&sys, p, &[wall])
        }
        "bounce-A2" => {
            let sys = a2()?;
            let wall = sys.gen(0);
            bounce_datum(&sys, p, &[wall])
        }
        other => return Err(GlueError::UnknownBuiltin(other.to_owned())),
    })
}

/// Check that `R_i` acts on `M_ij` (and similarly on the right) by
/// assembling the algebra; exposed for datum files.
pub fn validate(datum: &GluingDatum) -> Result<(), GlueError> {
    datum.assemble().map(|_| ())
}
