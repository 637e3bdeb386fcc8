//! Scalar traits shared by every exact coefficient type.
//!
//! Elements are self-contained values; the only runtime information some
//! types need in order to build constants (the modulus of a prime field) is
//! carried by [`Ring::Ctx`]. Matrices store one context so that zero-sized
//! shapes still know how to make their zeros.

use std::fmt::{Debug, Display};

/// A commutative ring with exact arithmetic.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    /// Data needed to build constants (`()` for characteristic zero types).
    type Ctx: Clone + PartialEq + Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, v: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// `None` exactly for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

/// Rings with a partial exact division (`a / b` when `b | a`).
///
/// Needed by fraction-free elimination.
pub trait ExactDiv: Ring {
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

impl<F: Field> ExactDiv for F {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.div(other)
    }
}
