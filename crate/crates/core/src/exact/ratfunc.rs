//! The field ℚ(u) of rational functions.

use std::fmt;

use super::laurent::LaurentPoly;
use super::poly::Poly;
use super::rational::Q;
use super::ring::{Field, Ring};

/// Reduced fraction `num/den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc {
    num: Poly<Q>,
    den: Poly<Q>,
}

impl RatFunc {
    /// `None` when `den` is zero.
    pub fn new(num: Poly<Q>, den: Poly<Q>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::from_poly(num));
        }
        let g = num.gcd(&den);
        let num = num.divrem(&g)?.0;
        let den = den.divrem(&g)?.0;
        let lead = den.leading()?.inv()?;
        Some(RatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_poly(p: Poly<Q>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(&()),
        }
    }

    pub fn from_q(c: Q) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn u() -> Self {
        Self::from_poly(Poly::x(&()))
    }

    pub fn from_laurent(l: &LaurentPoly) -> Self {
        let (v, p) = l.split_valuation();
        if v >= 0 {
            Self::from_poly(p.shift(v as usize))
        } else {
            Self::new(p, Poly::one(&()).shift((-v) as usize)).expect("nonzero denominator")
        }
    }

    pub fn num(&self) -> &Poly<Q> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Q> {
        &self.den
    }

    /// Evaluate at a rational point; `None` at a pole.
    pub fn eval(&self, at: &Q) -> Option<Q> {
        self.num.eval(at).div(&self.den.eval(at))
    }
}

impl Ring for RatFunc {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        Self::from_poly(Poly::zero(&()))
    }
    fn one(_: &()) -> Self {
        Self::from_poly(Poly::one(&()))
    }
    fn from_i64(_: &(), v: i64) -> Self {
        Self::from_poly(Poly::from_i64(&(), v))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("nonzero denominator");
        }
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .expect("nonzero denominator")
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&());
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominator")
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        // (u^2 - 1) / (2u - 2) = (u + 1)/2
        let r = RatFunc::new(
            Poly::from_i64s(&(), &[-1, 0, 1]),
            Poly::from_i64s(&(), &[-2, 2]),
        )
        .unwrap();
        assert!(r.den().is_one());
        assert_eq!(r.to_string(), "1/2+1/2u");
    }

    #[test]
    fn inverse_of_u() {
        let u = RatFunc::u();
        assert!(u.mul(&u.inv().unwrap()).is_one());
        assert_eq!(u.inv().unwrap().to_string(), "(1)/(u)");
    }
}
