//! Prime fields `F_p` with a runtime modulus.

use std::fmt;

use super::ring::{Field, Ring};

/// Residue class modulo a prime `p < 2^32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        debug_assert!(p >= 2 && p < (1 << 32));
        let v = value.rem_euclid(p as i64) as u64;
        Fp { value: v, p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for Fp {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.p
    }
    fn zero(p: &u64) -> Self {
        Fp { value: 0, p: *p }
    }
    fn one(p: &u64) -> Self {
        Fp { value: 1 % *p, p: *p }
    }
    fn from_i64(p: &u64, v: i64) -> Self {
        Fp::new(v, *p)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let mut v = self.value + o.value;
        if v >= self.p {
            v -= self.p;
        }
        Fp { value: v, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let v = if self.value >= o.value {
            self.value - o.value
        } else {
            self.value + self.p - o.value
        };
        Fp { value: v, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Fp {
            value: self.value * o.value % self.p,
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp {
                value: self.p - self.value,
                p: self.p,
            }
        }
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on (value, p)
        let (mut a, mut b) = (self.value as i64, self.p as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let t = a / b;
            (a, b) = (b, a - t * b);
            (x0, x1) = (x1, x0 - t * x1);
        }
        Some(Fp::new(x0, self.p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_mod_101() {
        for v in 1..101 {
            let a = Fp::new(v, 101);
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        assert!(Fp::new(0, 101).inv().is_none());
    }

    #[test]
    fn negative_representatives() {
        assert_eq!(Fp::new(-1, 7).value(), 6);
        assert!(is_prime(101) && !is_prime(91));
    }
}
