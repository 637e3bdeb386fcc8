//! Laurent polynomials in `u` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::{write_terms, Poly};
use super::rational::Q;
use super::ring::{Field, Ring};
use super::ExactError;

/// Finite sum `Σ c_k u^k` with `k ∈ ℤ`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Q)>) -> Self {
        let mut out = LaurentPoly::default();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn monomial(c: Q, e: i64) -> Self {
        Self::from_terms([(e, c)])
    }

    pub fn u() -> Self {
        Self::monomial(Q::one(&()), 1)
    }

    pub fn u_inv() -> Self {
        Self::monomial(Q::one(&()), -1)
    }

    pub fn from_poly(p: &Poly<Q>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (k as i64, c.clone())))
    }

    fn add_term(&mut self, e: i64, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(|| Q::zero(&()));
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> Q {
        self.terms.get(&e).cloned().unwrap_or_else(|| Q::zero(&()))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `Some` when no negative exponent occurs.
    pub fn to_poly(&self) -> Option<Poly<Q>> {
        if self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let deg = self.max_exp().unwrap_or(-1);
        Some(Poly::new(
            &(),
            (0..=deg).map(|k| self.coeff(k)).collect(),
        ))
    }

    /// Writes `self = u^v · P` with `P(0) ≠ 0`; zero maps to `(0, 0)`.
    pub fn split_valuation(&self) -> (i64, Poly<Q>) {
        match self.min_exp() {
            None => (0, Poly::zero(&())),
            Some(v) => (v, self.shift(-v).to_poly().expect("nonnegative after shift")),
        }
    }

    /// Substitute `u ↦ -u`.
    pub fn reflect(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, if e.rem_euclid(2) == 1 { c.neg() } else { c.clone() }))
                .collect(),
        }
    }

    pub fn eval(&self, at: &Q) -> Option<Q> {
        let inv = at.inv();
        let mut acc = Q::zero(&());
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                Ring::pow(at, e as u64)
            } else {
                Ring::pow(inv.as_ref()?, e.unsigned_abs())
            };
            acc = acc.add(&c.mul(&p));
        }
        Some(acc)
    }

    /// Division with remainder after factoring out powers of `u`.
    ///
    /// With `a = u^α A`, `b = u^β B` and `A = qB + r`, returns
    /// `(u^{α-β} q, u^α r)` so that `a = quotient·b + remainder`.
    pub fn poly_divrem(&self, b: &Self) -> Result<(Self, Self), ExactError> {
        if b.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (va, pa) = self.split_valuation();
        let (vb, pb) = b.split_valuation();
        let (q, r) = pa.divrem(&pb).ok_or(ExactError::DivisionByZero)?;
        Ok((
            Self::from_poly(&q).shift(va - vb),
            Self::from_poly(&r).shift(va),
        ))
    }

    /// Monic gcd of the `u`-free parts (units `c·u^k` are normalized away).
    pub fn poly_gcd(&self, b: &Self) -> Self {
        let (_, pa) = self.split_valuation();
        let (_, pb) = b.split_valuation();
        Self::from_poly(&pa.gcd(&pb))
    }

    pub fn divides(&self, a: &Self) -> Result<bool, ExactError> {
        Ok(a.poly_divrem(self)?.1.is_zero())
    }
}

/// Result of [`reduce_mod`]: the residue and the power `u^k` that was
/// cleared from the input.
#[derive(Clone, Debug, PartialEq)]
pub struct Residue {
    pub residue: Poly<Q>,
    pub shift: u64,
}

/// Canonical residue of `a` in `ℚ[u]/(m)`, using that `u` is a unit there.
///
/// Writes `a = u^{-k} P` with `P` an ordinary polynomial and returns
/// `P · (u^{-1})^k mod m`, which has degree below `deg m`.
pub fn reduce_mod(a: &LaurentPoly, m: &Poly<Q>) -> Result<Residue, ExactError> {
    if m.is_zero() {
        return Err(ExactError::ZeroModulus);
    }
    let k = a.min_exp().map_or(0, |e| (-e).max(0)) as u64;
    let p = a.shift(k as i64).to_poly().expect("cleared negative powers");
    if m.degree() == Some(0) {
        return Ok(Residue {
            residue: Poly::zero(&()),
            shift: k,
        });
    }
    let m0 = m.coeff(0);
    if k > 0 && m0.is_zero() {
        return Err(ExactError::UnitObstruction);
    }
    let mut res = p.rem(m).expect("nonzero modulus");
    if k > 0 {
        // m = m0 + u·m', so u·(-m'/m0) ≡ 1.
        let u_inv = m.unshift(1).scale(&m0.inv().expect("m(0) nonzero").neg());
        let factor = u_inv.pow_mod(k as u128, m);
        res = res.mul(&factor).rem(m).expect("nonzero modulus");
    }
    Ok(Residue {
        residue: res,
        shift: k,
    })
}

impl Ring for LaurentPoly {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        LaurentPoly::default()
    }
    fn one(_: &()) -> Self {
        Self::monomial(Q::one(&()), 0)
    }
    fn from_i64(_: &(), v: i64) -> Self {
        Self::monomial(Q::from_i64(&(), v), 0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, c.clone());
        }
        out
    }
    fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, c.neg());
        }
        out
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, "u", self.terms())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Q::from_i64(&(), c))))
    }

    fn phi6() -> Poly<Q> {
        Poly::from_i64s(&(), &[1, -1, 1])
    }

    #[test]
    fn one_minus_u_cubed_mod_phi6() {
        let r = reduce_mod(&l(&[(0, 1), (3, -1)]), &phi6()).unwrap();
        assert_eq!(r.residue, Poly::from_i64s(&(), &[2]));
    }

    #[test]
    fn reflected_poincare_vanishes_mod_phi6() {
        let r = reduce_mod(&l(&[(0, 1), (1, -2), (2, 2), (3, -1)]), &phi6()).unwrap();
        assert!(r.residue.is_zero());
    }

    #[test]
    fn negative_powers_use_inverse_of_u() {
        // u^-1 ≡ 1 - u mod Φ6
        let r = reduce_mod(&l(&[(-1, 1)]), &phi6()).unwrap();
        assert_eq!(r.residue, Poly::from_i64s(&(), &[1, -1]));
        assert_eq!(r.shift, 1);
    }

    #[test]
    fn unit_obstruction_and_zero_modulus() {
        let m = Poly::from_i64s(&(), &[0, 1]);
        assert_eq!(
            reduce_mod(&l(&[(-1, 1)]), &m),
            Err(ExactError::UnitObstruction)
        );
        assert_eq!(
            reduce_mod(&l(&[(0, 1)]), &Poly::zero(&())),
            Err(ExactError::ZeroModulus)
        );
    }

    #[test]
    fn divrem_reconstructs() {
        let a = l(&[(-2, 3), (0, 1), (3, 5)]);
        let b = l(&[(-1, 1), (1, 2)]);
        let (q, r) = a.poly_divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn display_with_negative_exponents() {
        assert_eq!(l(&[(-1, 1), (0, 2), (3, -1)]).to_string(), "u^-1+2-u^3");
    }
}
