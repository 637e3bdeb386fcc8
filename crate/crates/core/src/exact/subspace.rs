//! Subspaces of `F^n` in canonical echelon form.

use std::fmt;

use super::matrix::{Echelon, Matrix};
use super::ring::Field;
use super::ExactError;

/// A subspace stored by its reduced row echelon basis, so equal subspaces
/// compare equal structurally.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ctx: &F::Ctx, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(ctx, 0, ambient),
            pivots: vec![],
        }
    }

    pub fn full(ctx: &F::Ctx, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ctx, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let Echelon { rref, pivots } = m.echelon();
        Subspace {
            ambient: m.ncols(),
            basis: rref,
            pivots,
        }
    }

    pub fn span(ctx: &F::Ctx, ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        let m = Matrix::from_rows(ctx, ambient, vectors).expect("vectors of ambient length");
        Self::from_matrix(&m)
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn context(&self) -> &F::Ctx {
        self.basis.context()
    }

    /// Echelon basis, one vector per row.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
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

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[F]) -> Result<Option<Vec<F>>, ExactError> {
        self.check_ambient(v.len())?;
        let coeffs: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in rest.iter_mut().zip(self.basis.row(k)) {
                *x = x.sub(&c.mul(b));
            }
        }
        Ok(rest.iter().all(|x| x.is_zero()).then_some(coeffs))
    }

    pub fn contains(&self, v: &[F]) -> Result<bool, ExactError> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, ExactError> {
        other.check_ambient(self.ambient)?;
        for r in self.basis.rows_iter() {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_ambient(other.ambient)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)))
    }

    pub fn sum_all(ctx: &F::Ctx, ambient: usize, parts: &[Self]) -> Result<Self, ExactError> {
        let mut m = Matrix::zeros(ctx, 0, ambient);
        for p in parts {
            p.check_ambient(ambient)?;
            m = m.vstack(&p.basis);
        }
        Ok(Self::from_matrix(&m))
    }

    /// Matrix whose kernel is exactly this subspace: one row per non-pivot
    /// column `c`, equal to `e_c - Σ_k basis[k][c] e_{pivot_k}`.
    pub fn quotient_matrix(&self) -> Matrix<F> {
        let ctx = self.context().clone();
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.ambient).filter(|&c| !is_pivot[c]).collect();
        let mut q = Matrix::zeros(&ctx, free.len(), self.ambient);
        for (r, &c) in free.iter().enumerate() {
            q.set(r, c, F::one(&ctx));
            for (k, &p) in self.pivots.iter().enumerate() {
                q.set(r, p, self.basis.get(k, c).neg());
            }
        }
        q
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_ambient(other.ambient)?;
        Ok(self.quotient_matrix().vstack(&other.quotient_matrix()).kernel())
    }

    /// `{ m v : v ∈ self }` for a linear map given by the matrix `m`.
    pub fn image_under(&self, m: &Matrix<F>) -> Result<Self, ExactError> {
        self.check_ambient(m.ncols())?;
        Ok(Self::from_matrix(&self.basis.mul(&m.transpose())))
    }

    /// `{ x : m x ∈ self }`.
    pub fn preimage_under(&self, m: &Matrix<F>) -> Result<Self, ExactError> {
        self.check_ambient(m.nrows())?;
        Ok(self.quotient_matrix().mul(m).kernel())
    }
}

impl<F: Field> fmt::Display for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subspace of dim {} in {}", self.dim(), self.ambient)?;
        write!(f, "{}", self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::Q;
    use crate::exact::ring::Ring;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| Q::from_i64(&(), x)).collect()
    }

    #[test]
    fn coordinate_axes_meet_in_zero() {
        let a = Subspace::span(&(), 2, vec![v(&[1, 0])]);
        let b = Subspace::span(&(), 2, vec![v(&[0, 1])]);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(a.sum(&b).unwrap().is_full());
    }

    #[test]
    fn spanning_set_gives_full_plane() {
        let a = Subspace::span(&(), 2, vec![v(&[1, 0]), v(&[1, 1])]);
        assert_eq!(a, Subspace::full(&(), 2));
    }

    #[test]
    fn adding_zero_is_neutral() {
        let a = Subspace::span(&(), 3, vec![v(&[1, 2, 3])]);
        assert_eq!(a.sum(&Subspace::zero(&(), 3)).unwrap(), a);
    }

    #[test]
    fn quotient_kernel_recovers_subspace() {
        let a = Subspace::span(&(), 4, vec![v(&[1, 2, 0, 1]), v(&[0, 1, 1, 1])]);
        assert_eq!(a.quotient_matrix().kernel(), a);
    }

    #[test]
    fn ambient_mismatch() {
        let a: Subspace<Q> = Subspace::zero(&(), 2);
        let b = Subspace::zero(&(), 3);
        assert!(matches!(
            a.sum(&b),
            Err(ExactError::AmbientMismatch { .. })
        ));
    }
}
