//! Sublattices of `ℤ^n` via row Hermite normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::rational::Q;
use super::ExactError;

pub type IntVec = Vec<BigInt>;

/// Row Hermite normal form of the given rows (zero rows dropped).
///
/// Pivots are positive and the entries above each pivot lie in
/// `[0, pivot)`, which makes the result canonical for the row lattice.
pub fn hnf(rows: &[IntVec], ncols: usize) -> Vec<IntVec> {
    let mut a: Vec<IntVec> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        loop {
            let Some(best) = (r..a.len())
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()))
            else {
                break;
            };
            a.swap(r, best);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let (head, tail) = a.split_at_mut(i);
                sub_multiple(&mut tail[0], &head[r], &q);
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.get(r).is_none_or(|row| row[c].is_zero()) {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = a.split_at_mut(r);
            sub_multiple(&mut head[i], &tail[0], &q);
        }
        r += 1;
    }
    a.truncate(r);
    a
}

fn sub_multiple(target: &mut IntVec, src: &IntVec, q: &BigInt) {
    for (t, s) in target.iter_mut().zip(src) {
        *t -= q * s;
    }
}

/// Integer left kernel `{y : y A = 0}` of the row list `a`.
pub fn left_kernel(a: &[IntVec], ncols: usize) -> Vec<IntVec> {
    let m = a.len();
    let aug: Vec<IntVec> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            v.extend((0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            v
        })
        .collect();
    hnf(&aug, ncols + m)
        .into_iter()
        .filter(|row| row[..ncols].iter().all(|x| x.is_zero()))
        .map(|row| row[ncols..].to_vec())
        .collect()
}

/// A subgroup of `ℤ^n`, stored as its row HNF basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerLattice {
    ambient: usize,
    basis: Vec<IntVec>,
}

impl IntegerLattice {
    pub fn from_generators(ambient: usize, gens: &[IntVec]) -> Result<Self, ExactError> {
        if let Some(g) = gens.iter().find(|g| g.len() != ambient) {
            return Err(ExactError::DimensionMismatch {
                op: "lattice generator",
                expected: ambient,
                found: g.len(),
            });
        }
        Ok(IntegerLattice {
            ambient,
            basis: hnf(gens, ambient),
        })
    }

    pub fn from_i64(ambient: usize, gens: &[&[i64]]) -> Result<Self, ExactError> {
        let gens: Vec<IntVec> = gens
            .iter()
            .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_generators(ambient, &gens)
    }

    pub fn zero(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            basis: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(ambient, i)).collect();
        IntegerLattice { ambient, basis }
    }

    /// Column lattice `M ℤ^cols` of an integer matrix.
    pub fn image(m: &Matrix<Q>) -> Result<Self, ExactError> {
        let cols = integer_rows(&m.transpose())?;
        Self::from_generators(m.nrows(), &cols)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[IntVec] {
        &self.basis
    }

    /// Index in `ℤ^n` for full-rank lattices.
    pub fn index(&self) -> Option<BigInt> {
        if self.rank() != self.ambient {
            return None;
        }
        let mut prod = BigInt::one();
        for (i, row) in self.basis.iter().enumerate() {
            prod *= &row[i];
        }
        Some(prod)
    }

    fn check_ambient(&self, n: usize) -> Result<(), ExactError> {
        if self.ambient == n {
            Ok(())
        } else {
            Err(ExactError::AmbientMismatch {
                left: self.ambient,
                right: n,
            })
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool, ExactError> {
        self.check_ambient(v.len())?;
        let mut rest = v.to_vec();
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero HNF row");
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return Ok(false);
            }
            sub_multiple(&mut rest, row, &q);
        }
        Ok(rest.iter().all(|x| x.is_zero()))
    }

    pub fn contains_lattice(&self, other: &Self) -> Result<bool, ExactError> {
        for row in &other.basis {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_ambient(other.ambient)?;
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Self::from_generators(self.ambient, &gens)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_ambient(other.ambient)?;
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let k = self.basis.len();
        let gens: Vec<IntVec> = left_kernel(&stacked, self.ambient)
            .into_iter()
            .map(|y| combine(&y[..k], &self.basis, self.ambient))
            .collect();
        Self::from_generators(self.ambient, &gens)
    }

    /// `{ x ∈ ℤ^cols : A x ∈ self }`.
    pub fn preimage(&self, a: &Matrix<Q>) -> Result<Self, ExactError> {
        self.check_ambient(a.nrows())?;
        let n = a.ncols();
        // Solve x Aᵀ = z B over ℤ and keep x.
        let mut stacked = integer_rows(&a.transpose())?;
        stacked.extend(self.basis.iter().map(|r| r.iter().map(|x| -x).collect()));
        let gens: Vec<IntVec> = left_kernel(&stacked, self.ambient)
            .into_iter()
            .map(|y| y[..n].to_vec())
            .collect();
        Self::from_generators(n, &gens)
    }

    /// `{ (x, y) ∈ ℤ^cols × ℤ^rows : M x − y ∈ self }`, generated by the
    /// rows `(e_i, M e_i)` and `(0, −l)` for `l` in the basis.
    pub fn preimage_condition(&self, m: &Matrix<Q>) -> Result<Self, ExactError> {
        self.check_ambient(m.nrows())?;
        let (rows, cols) = (m.nrows(), m.ncols());
        let mt = integer_rows(&m.transpose())?;
        let mut gens = Vec::with_capacity(cols + self.basis.len());
        for (i, col) in mt.into_iter().enumerate() {
            let mut v = unit(cols, i);
            v.extend(col);
            gens.push(v);
        }
        for l in &self.basis {
            let mut v = vec![BigInt::zero(); cols];
            v.extend(l.iter().map(|x| -x));
            gens.push(v);
        }
        Self::from_generators(cols + rows, &gens)
    }
}

fn unit(n: usize, i: usize) -> IntVec {
    (0..n)
        .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
        .collect()
}

fn combine(coeffs: &[BigInt], rows: &[IntVec], n: usize) -> IntVec {
    let mut out = vec![BigInt::zero(); n];
    for (c, r) in coeffs.iter().zip(rows) {
        for (o, x) in out.iter_mut().zip(r) {
            *o += c * x;
        }
    }
    out
}

/// Rows of a rational matrix whose entries must all be integers.
pub fn integer_rows(m: &Matrix<Q>) -> Result<Vec<IntVec>, ExactError> {
    m.rows_iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    if x.is_integer() {
                        Ok(x.to_integer())
                    } else {
                        Err(ExactError::NonInteger(x.to_string()))
                    }
                })
                .collect()
        })
        .collect()
}

impl fmt::Display for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "<{}>", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_z_meet_three_z() {
        let a = IntegerLattice::from_i64(1, &[&[2]]).unwrap();
        let b = IntegerLattice::from_i64(1, &[&[3]]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), IntegerLattice::from_i64(1, &[&[6]]).unwrap());
        assert_eq!(a.sum(&b).unwrap(), IntegerLattice::full(1));
    }

    #[test]
    fn image_of_identity_is_everything() {
        let id: Matrix<Q> = Matrix::identity(&(), 3);
        assert_eq!(IntegerLattice::image(&id).unwrap(), IntegerLattice::full(3));
    }

    #[test]
    fn preimage_condition_index_three() {
        let m: Matrix<Q> = Matrix::from_i64_rows(&(), &[&[2]]);
        let l = IntegerLattice::from_i64(1, &[&[3]]).unwrap();
        let p = l.preimage_condition(&m).unwrap();
        assert_eq!(p.index(), Some(BigInt::from(3)));
        // Residue enumeration: (x, y) in the lattice iff 2x - y ≡ 0 mod 3.
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let v = vec![BigInt::from(x), BigInt::from(y)];
                assert_eq!(p.contains(&v).unwrap(), (2 * x - y).rem_euclid(3) == 0);
            }
        }
    }

    #[test]
    fn preimage_under_map() {
        // {x : 2x ∈ 4ℤ} = 2ℤ
        let a: Matrix<Q> = Matrix::from_i64_rows(&(), &[&[2]]);
        let l = IntegerLattice::from_i64(1, &[&[4]]).unwrap();
        assert_eq!(l.preimage(&a).unwrap(), IntegerLattice::from_i64(1, &[&[2]]).unwrap());
    }

    #[test]
    fn non_integer_rejected() {
        let m = Matrix::from_rows(&(), 1, vec![vec![crate::exact::rational::qf(1, 2)]]).unwrap();
        assert!(matches!(IntegerLattice::image(&m), Err(ExactError::NonInteger(_))));
    }
}
