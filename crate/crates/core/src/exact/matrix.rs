//! Dense matrices over an exact ring, with elimination over fields and
//! fraction-free determinants over polynomial rings.

use std::fmt;

use super::laurent::LaurentPoly;
use super::poly::Poly;
use super::rational::Q;
use super::ring::{ExactDiv, Field, Ring};
use super::subspace::Subspace;
use super::ExactError;

/// Row-major dense matrix. Shape mismatches in the arithmetic operators are
/// programming errors and panic; the fallible entry points return
/// [`ExactError`].
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
    ctx: R::Ctx,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(ctx: &R::Ctx, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(ctx); rows * cols],
            ctx: ctx.clone(),
        }
    }

    pub fn identity(ctx: &R::Ctx, n: usize) -> Self {
        Self::from_fn(ctx, n, n, |i, j| {
            if i == j {
                R::one(ctx)
            } else {
                R::zero(ctx)
            }
        })
    }

    pub fn scalar(ctx: &R::Ctx, n: usize, c: &R) -> Self {
        Self::from_fn(ctx, n, n, |i, j| if i == j { c.clone() } else { R::zero(ctx) })
    }

    pub fn from_fn(
        ctx: &R::Ctx,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> R,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            data,
            ctx: ctx.clone(),
        }
    }

    /// Build from row vectors; `cols` fixes the width when there are no rows.
    pub fn from_rows(ctx: &R::Ctx, cols: usize, rows: Vec<Vec<R>>) -> Result<Self, ExactError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(ExactError::DimensionMismatch {
                    op: "from_rows",
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
            ctx: ctx.clone(),
        })
    }

    pub fn from_i64_rows(ctx: &R::Ctx, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            ctx,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| R::from_i64(ctx, v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Column matrix.
    pub fn column(ctx: &R::Ctx, v: Vec<R>) -> Self {
        let n = v.len();
        Matrix {
            rows: n,
            cols: 1,
            data: v,
            ctx: ctx.clone(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn context(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[R]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        self.rows_iter().map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            ctx: ctx.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix add shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sub shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&R::from_i64(&self.ctx, -1))
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix mul shape");
        let mut out = Self::zeros(&self.ctx, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero(&self.ctx);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square(), "matrix pow of non-square");
        let mut base = self.clone();
        let mut acc = Self::identity(&self.ctx, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `[self | o]`.
    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows, "hstack rows");
        Self::from_fn(&self.ctx, self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        })
    }

    /// `self` on top of `o`.
    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix {
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
            ctx: self.ctx.clone(),
        }
    }

    pub fn vstack_all(ctx: &R::Ctx, cols: usize, blocks: &[Self]) -> Self {
        let mut out = Self::zeros(ctx, 0, cols);
        for b in blocks {
            out = out.vstack(b);
        }
        out
    }

    pub fn block_diag(ctx: &R::Ctx, blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(ctx, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(&self.ctx, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.ctx, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.ctx, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(&self.ctx, self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols)
                .mul(o.get(i % o.rows, j % o.cols))
        })
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero(&self.ctx);
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    pub fn commutes_with(&self, o: &Self) -> bool {
        self.mul(o) == o.mul(self)
    }

    /// Cofactor expansion along the first row; intended as a test oracle
    /// for small matrices.
    pub fn det_expansion(&self) -> Result<R, ExactError> {
        self.require_square()?;
        Ok(expand(self, &(0..self.rows).collect::<Vec<_>>()))
    }

    fn require_square(&self) -> Result<(), ExactError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

fn expand<R: Ring>(m: &Matrix<R>, cols: &[usize]) -> R {
    let depth = m.nrows() - cols.len();
    if cols.is_empty() {
        return R::one(m.context());
    }
    let mut acc = R::zero(m.context());
    for (k, &c) in cols.iter().enumerate() {
        let a = m.get(depth, c);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a.mul(&expand(m, &rest));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

impl<R: ExactDiv> Matrix<R> {
    /// Fraction-free (Bareiss) determinant.
    pub fn det_bareiss(&self) -> Result<R, ExactError> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(R::one(&self.ctx));
        }
        let mut a = self.clone();
        let mut prev = R::one(&self.ctx);
        let mut negate = false;
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return Ok(R::zero(&self.ctx));
                };
                a.swap_rows(k, p);
                negate = !negate;
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let aik = a.get(i, k).clone();
                for j in k + 1..n {
                    let num = a.get(i, j).mul(&pivot).sub(&aik.mul(a.get(k, j)));
                    let v = num.div_exact(&prev).expect("Bareiss division is exact");
                    a.set(i, j, v);
                }
                a.set(i, k, R::zero(&self.ctx));
            }
            prev = pivot;
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if negate { d.neg() } else { d })
    }
}

impl<R: Ring> Matrix<R> {
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Matrix<LaurentPoly> {
    /// Determinant over `ℚ[u, u⁻¹]`: each row is multiplied by a power of
    /// `u` to clear negative exponents, Bareiss runs over `ℚ[u]`, and the
    /// recorded powers are divided back out.
    pub fn det_laurent(&self) -> Result<LaurentPoly, ExactError> {
        self.require_square()?;
        let mut total_shift = 0i64;
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let k = self
                .row(i)
                .iter()
                .filter_map(|x| x.min_exp())
                .min()
                .unwrap_or(0);
            total_shift += k;
            rows.push(
                self.row(i)
                    .iter()
                    .map(|x| x.shift(-k).to_poly().expect("shifted to polynomial"))
                    .collect(),
            );
        }
        let pm: Matrix<Poly<Q>> = Matrix::from_rows(&(), self.cols, rows)?;
        Ok(LaurentPoly::from_poly(&pm.det_bareiss()?).shift(total_shift))
    }
}

/// Reduced row echelon form with pivot columns.
pub struct Echelon<F: Field> {
    pub rref: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    /// Gauss–Jordan elimination; zero rows are dropped from the result.
    pub fn echelon(&self) -> Echelon<F> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            for j in c..a.cols {
                let v = a.get(r, j).mul(&inv);
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in c..a.cols {
                    let rj = a.get(r, j);
                    if rj.is_zero() {
                        continue;
                    }
                    let v = a.get(i, j).sub(&f.mul(rj));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        a.data.truncate(r * a.cols);
        a.rows = r;
        Echelon { rref: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{x : Ax = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let Echelon { rref, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![F::zero(&self.ctx); self.cols];
                v[free] = F::one(&self.ctx);
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = rref.get(k, free).neg();
                }
                v
            })
            .collect()
    }

    pub fn kernel(&self) -> Subspace<F> {
        Subspace::span(&self.ctx, self.cols, self.kernel_basis())
    }

    /// Left kernel `{y : yA = 0}`.
    pub fn left_kernel(&self) -> Subspace<F> {
        self.transpose().kernel()
    }

    /// Column space.
    pub fn image(&self) -> Subspace<F> {
        Subspace::from_matrix(&self.transpose())
    }

    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_matrix(self)
    }

    /// Some solution of `Ax = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>, ExactError> {
        if b.len() != self.rows {
            return Err(ExactError::DimensionMismatch {
                op: "solve",
                expected: self.rows,
                found: b.len(),
            });
        }
        let aug = self.hstack(&Matrix::column(&self.ctx, b.to_vec()));
        let Echelon { rref, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(&self.ctx); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = rref.get(k, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Solve `AX = B` column by column.
    pub fn solve_matrix(&self, b: &Matrix<F>) -> Result<Option<Matrix<F>>, ExactError> {
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            match self.solve(&b.col(j))? {
                Some(x) => cols.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(
            Matrix::from_rows(&self.ctx, self.cols, cols)?.transpose(),
        ))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.ctx, n));
        let Echelon { rref, pivots } = aug.echelon();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        Some(rref.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Determinant by elimination over the field.
    pub fn det(&self) -> Result<F, ExactError> {
        self.require_square()?;
        let mut a = self.clone();
        let n = self.rows;
        let mut d = F::one(&self.ctx);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
                return Ok(F::zero(&self.ctx));
            };
            if p != c {
                a.swap_rows(c, p);
                d = d.neg();
            }
            let piv = a.get(c, c).clone();
            d = d.mul(&piv);
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                let f = a.get(i, c).mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = a.get(i, j).sub(&f.mul(a.get(c, j)));
                    a.set(i, j, v);
                }
            }
        }
        Ok(d)
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
