//! Dense univariate polynomials over an exact ring.

use std::fmt;

use super::ring::{ExactDiv, Field, Ring};

/// Polynomial with coefficients stored from the constant term upwards.
///
/// The coefficient vector never ends in a zero; the zero polynomial has an
/// empty vector.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
    ctx: R::Ctx,
}

impl<R: Ring> Poly<R> {
    pub fn new(ctx: &R::Ctx, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            ctx: ctx.clone(),
        }
    }

    pub fn from_i64s(ctx: &R::Ctx, cs: &[i64]) -> Self {
        Self::new(ctx, cs.iter().map(|&c| R::from_i64(ctx, c)).collect())
    }

    pub fn constant(c: R) -> Self {
        let ctx = c.ctx();
        Self::new(&ctx, vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let ctx = c.ctx();
        let mut v = vec![R::zero(&ctx); k];
        v.push(c);
        Self::new(&ctx, v)
    }

    pub fn x(ctx: &R::Ctx) -> Self {
        Self::monomial(R::one(ctx), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| R::zero(&self.ctx))
    }

    pub fn context(&self) -> &R::Ctx {
        &self.ctx
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::new(&self.ctx, vec![]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v = vec![R::zero(&self.ctx); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(&self.ctx, v)
    }

    /// Divide by `x^k`, dropping lower terms.
    pub fn unshift(&self, k: usize) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().skip(k).cloned().collect())
    }

    /// The polynomial `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            &self.ctx,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.ctx,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&R::from_i64(&self.ctx, k as i64)))
                .collect(),
        )
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division; `None` when dividing by zero.
    pub fn divrem(&self, b: &Self) -> Option<(Self, Self)> {
        let db = b.degree()?;
        let lead_inv = b.leading()?.inv()?;
        let ctx = self.ctx.clone();
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Some((Self::new(&ctx, vec![]), Self::new(&ctx, vec![])));
        };
        if da < db {
            return Some((Self::new(&ctx, vec![]), self.clone()));
        }
        let mut quot = vec![F::zero(&ctx); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = rem[k + db].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(bc));
            }
            quot[k] = c;
        }
        rem.truncate(db);
        Some((Self::new(&ctx, quot), Self::new(&ctx, rem)))
    }

    pub fn rem(&self, b: &Self) -> Option<Self> {
        self.divrem(b).map(|(_, r)| r)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m).expect("nonzero modulus");
        let mut acc = Self::constant(F::one(&self.ctx)).rem(m).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m).expect("nonzero modulus");
            }
            base = base.mul(&base).rem(m).expect("nonzero modulus");
            e >>= 1;
        }
        acc
    }
}

impl<F: Field> ExactDiv for Poly<F> {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let (q, r) = self.divrem(other)?;
        r.is_zero().then_some(q)
    }
}

impl<R: Ring> Ring for Poly<R> {
    type Ctx = R::Ctx;

    fn ctx(&self) -> R::Ctx {
        self.ctx.clone()
    }
    fn zero(ctx: &R::Ctx) -> Self {
        Self::new(ctx, vec![])
    }
    fn one(ctx: &R::Ctx) -> Self {
        Self::new(ctx, vec![R::one(ctx)])
    }
    fn from_i64(ctx: &R::Ctx, v: i64) -> Self {
        Self::new(ctx, vec![R::from_i64(ctx, v)])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            &self.ctx,
            (0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect(),
        )
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            &self.ctx,
            (0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect(),
        )
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut v = vec![R::zero(&self.ctx); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Self::new(&self.ctx, v)
    }
    fn neg(&self) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|c| c.neg()).collect())
    }
}

/// Writes `c_0 + c_1 u + ...` compactly, e.g. `1-2u+2u^2-u^3`.
pub(crate) fn write_terms<'a, R: Ring>(
    f: &mut fmt::Formatter<'_>,
    var: &str,
    terms: impl Iterator<Item = (i64, &'a R)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        if neg {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        first = false;
        let body = if body.contains(['+', '-', ' ']) {
            format!("({body})")
        } else {
            body
        };
        match e {
            0 => write!(f, "{body}")?,
            _ => {
                if body != "1" {
                    write!(f, "{body}")?;
                }
                if e == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            "u",
            self.coeffs.iter().enumerate().map(|(k, c)| (k as i64, c)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::Q;

    fn p(cs: &[i64]) -> Poly<Q> {
        Poly::from_i64s(&(), cs)
    }

    #[test]
    fn phi6_divides_u3_plus_1() {
        let (q, r) = p(&[1, 0, 0, 1]).divrem(&p(&[1, -1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        // gcd(1-u^2, 1-u^3) = u-1
        assert_eq!(p(&[1, 0, -1]).gcd(&p(&[1, 0, 0, -1])), p(&[-1, 1]));
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(p(&[1, -2, 2, -1]).to_string(), "1-2u+2u^2-u^3");
        assert_eq!(p(&[4, -2]).to_string(), "4-2u");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn division_by_zero_is_none() {
        assert!(p(&[1, 1]).divrem(&p(&[])).is_none());
    }
}
