//! Cosets, half-sets, geodesics and the rank-two witnesses.

use std::collections::BTreeSet;

use super::{genset, CoxeterError, CoxeterSystem, GenSet, GroupElement};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Closest point of a coset `W_J x` to `w`: `p ∈ W_J x` minimizes
/// `ℓ(w q⁻¹)` and `n = w p⁻¹`, so `w = n·p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CosetPointer {
    pub j: GenSet,
    pub x: GroupElement,
    pub p: GroupElement,
    pub n: GroupElement,
}

/// `w = w(s, s2) · w'` with lengths adding, where `w(s, s2) = s·w0(s, s2)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Sizig3Witness {
    pub s2: usize,
    pub w_s_s2: GroupElement,
    pub w_prime: GroupElement,
}

impl CoxeterSystem {
    /// Longest element of `W_J`.
    pub fn parabolic_w0(&self, j: GenSet) -> GroupElement {
        *self.parabolic(j).last().expect("W_J contains the identity")
    }

    pub fn coset_pointer(&self, j: GenSet, x: GroupElement, w: GroupElement) -> CosetPointer {
        let p = self
            .right_coset(j, x)
            .into_iter()
            .min_by_key(|&q| (self.length(self.mul(w, self.inv(q))), q))
            .expect("coset is nonempty");
        CosetPointer {
            j,
            x,
            p,
            n: self.mul(w, self.inv(p)),
        }
    }

    /// Right half-set `{w : ℓ(w s_i) > ℓ(w)}` or left half-set
    /// `{w : ℓ(s_i w) > ℓ(w)}`, in ShortLex order.
    pub fn half_set(&self, i: usize, side: Side) -> Vec<GroupElement> {
        self.elements()
            .filter(|&w| match side {
                Side::Right => !self.is_right_descent(w, i),
                Side::Left => !self.is_left_descent(w, i),
            })
            .collect()
    }

    /// Whether `x` lies on some geodesic from `a` to `b`.
    pub fn on_geodesic(&self, a: GroupElement, x: GroupElement, b: GroupElement) -> bool {
        self.distance(a, x) + self.distance(x, b) == self.distance(a, b)
    }

    /// All minimal paths from `a` to `b` in the left Cayley graph, each as a
    /// vertex list starting at `a`.
    pub fn geodesics(
        &self,
        a: GroupElement,
        b: GroupElement,
        cap: usize,
    ) -> Result<Vec<Vec<GroupElement>>, CoxeterError> {
        let mut out = Vec::new();
        let mut path = vec![a];
        self.geodesics_rec(b, &mut path, &mut out, cap)?;
        Ok(out)
    }

    fn geodesics_rec(
        &self,
        b: GroupElement,
        path: &mut Vec<GroupElement>,
        out: &mut Vec<Vec<GroupElement>>,
        cap: usize,
    ) -> Result<(), CoxeterError> {
        let x = *path.last().expect("nonempty path");
        let d = self.distance(x, b);
        if d == 0 {
            if out.len() == cap {
                return Err(CoxeterError::PathExplosion { cap });
            }
            out.push(path.clone());
            return Ok(());
        }
        for s in 0..self.rank() {
            let y = self.gen_mul(s, x);
            if self.distance(y, b) + 1 == d {
                path.push(y);
                self.geodesics_rec(b, path, out, cap)?;
                path.pop();
            }
        }
        Ok(())
    }

    /// Every geodesic between two members stays inside the set.
    pub fn is_convex(&self, set: &[GroupElement]) -> bool {
        self.convexity_violation(set).is_none()
    }

    /// A triple `(a, x, b)` with `a, b` in the set, `x` outside it and on a
    /// geodesic from `a` to `b`.
    pub fn convexity_violation(
        &self,
        set: &[GroupElement],
    ) -> Option<(GroupElement, GroupElement, GroupElement)> {
        let mut member = vec![false; self.order()];
        for w in set {
            member[w.index()] = true;
        }
        let outside: Vec<GroupElement> = self.elements().filter(|w| !member[w.index()]).collect();
        for (k, &a) in set.iter().enumerate() {
            for &b in &set[k + 1..] {
                for &x in &outside {
                    if self.on_geodesic(a, x, b) {
                        return Some((a, x, b));
                    }
                }
            }
        }
        None
    }

    /// Precondition of the rank-two lemma: `w ≠ e` and there is `s'` with
    /// `s w = w s'` and `ℓ(s w) = ℓ(w) + 1`.
    pub fn sizig3_applies(&self, s: usize, w: GroupElement) -> bool {
        if w == self.identity() || self.is_left_descent(w, s) {
            return false;
        }
        let sw = self.gen_mul(s, w);
        (0..self.rank()).any(|t| self.mul_gen(w, t) == sw)
    }

    pub fn sizig3_witness(&self, s: usize, w: GroupElement) -> Result<Sizig3Witness, CoxeterError> {
        if s >= self.rank() {
            return Err(CoxeterError::BadIndex(s));
        }
        if !self.sizig3_applies(s, w) {
            return Err(CoxeterError::PreconditionFailed(format!(
                "s{} and {} do not satisfy sw = ws', l(sw) = l(w) + 1, w != e",
                s + 1,
                self.format_element(w)
            )));
        }
        for s2 in (0..self.rank()).filter(|&t| t != s) {
            let d = self.gen_mul(s, self.parabolic_w0(genset(&[s, s2])));
            let rest = self.mul(self.inv(d), w);
            if self.length(w) == self.length(d) + self.length(rest) {
                return Ok(Sizig3Witness {
                    s2,
                    w_s_s2: d,
                    w_prime: rest,
                });
            }
        }
        Err(CoxeterError::PreconditionFailed(format!(
            "no witness for s{} and {}",
            s + 1,
            self.format_element(w)
        )))
    }

    /// Whether the whole coset `W_J y` lies in the right half-set `P_i`,
    /// decided as `y s_i y⁻¹ ∉ W_J`. Requires `y ∈ P_i`.
    pub fn coset_in_half(&self, j: GenSet, y: GroupElement, i: usize) -> Result<bool, CoxeterError> {
        if self.is_right_descent(y, i) {
            return Err(CoxeterError::PreconditionFailed(format!(
                "{} is not in P_{}",
                self.format_element(y),
                i + 1
            )));
        }
        let r = self.mul(self.mul_gen(y, i), self.inv(y));
        Ok(!self.in_parabolic(j, r))
    }

    /// Brute-force form of [`Self::coset_in_half`], used as an oracle.
    pub fn coset_in_half_by_enumeration(&self, j: GenSet, y: GroupElement, i: usize) -> bool {
        self.right_coset(j, y)
            .into_iter()
            .all(|w| !self.is_right_descent(w, i))
    }

    pub fn is_reflection(&self, r: GroupElement) -> bool {
        self.elements().any(|w| {
            (0..self.rank()).any(|s| self.mul(self.mul_gen(w, s), self.inv(w)) == r)
        })
    }

    /// Simple generators occurring in a reduced word of the reflection `r`.
    pub fn simple_support(&self, r: GroupElement) -> Result<BTreeSet<usize>, CoxeterError> {
        if !self.is_reflection(r) {
            return Err(CoxeterError::NotAReflection(self.format_element(r)));
        }
        Ok(self.normal_form(r).into_iter().collect())
    }

    /// Whether no geodesic from `y` to `w` passes through `y s_i`.
    ///
    /// For `y ≠ w` this requires `ℓ(y s_i y⁻¹) > ℓ(w s_i w⁻¹)`; for `y = w`
    /// there is nothing to check and the answer is `true`.
    pub fn geodesic_obstruction_check(
        &self,
        y: GroupElement,
        w: GroupElement,
        i: usize,
    ) -> Result<bool, CoxeterError> {
        if y == w {
            return Ok(true);
        }
        let conj = |x: GroupElement| self.length(self.mul(self.mul_gen(x, i), self.inv(x)));
        if conj(y) <= conj(w) {
            return Err(CoxeterError::PreconditionFailed(format!(
                "l(y s_i y^-1) = {} is not above l(w s_i w^-1) = {}",
                conj(y),
                conj(w)
            )));
        }
        Ok(!self.on_geodesic(y, self.mul_gen(y, i), w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(sys: &CoxeterSystem, w: &[usize]) -> GroupElement {
        sys.from_word(w).unwrap()
    }

    #[test]
    fn coset_pointer_examples() {
        let a2 = CoxeterSystem::a(2);
        let j = genset(&[0]);
        let e = a2.identity();
        let cp = a2.coset_pointer(j, e, el(&a2, &[0]));
        assert_eq!((cp.p, cp.n), (el(&a2, &[0]), e));
        let cp = a2.coset_pointer(j, e, el(&a2, &[1, 0]));
        assert_eq!((cp.p, cp.n), (el(&a2, &[0]), el(&a2, &[1])));
        let w = el(&a2, &[0, 1]);
        let x = el(&a2, &[1]);
        let cp = a2.coset_pointer(0, x, w);
        assert_eq!((cp.p, cp.n), (x, a2.mul(w, a2.inv(x))));
    }

    #[test]
    fn right_half_set_of_a2() {
        let a2 = CoxeterSystem::a(2);
        let p = a2.half_set(0, Side::Right);
        assert_eq!(p, vec![a2.identity(), el(&a2, &[1]), el(&a2, &[0, 1])]);
    }

    #[test]
    fn geodesics_to_w0_match_reduced_words() {
        let a2 = CoxeterSystem::a(2);
        assert_eq!(a2.geodesics(a2.identity(), a2.w0(), 100).unwrap().len(), 2);
        let b3 = CoxeterSystem::b(3);
        assert_eq!(
            b3.geodesics(b3.identity(), b3.w0(), 10_000).unwrap().len(),
            b3.reduced_words(b3.w0(), None).len()
        );
        assert!(matches!(
            b3.geodesics(b3.identity(), b3.w0(), 3),
            Err(CoxeterError::PathExplosion { cap: 3 })
        ));
    }

    #[test]
    fn sizig3_examples() {
        let a2 = CoxeterSystem::a(2);
        let wit = a2.sizig3_witness(0, el(&a2, &[1, 0])).unwrap();
        assert_eq!(wit.s2, 1);
        assert_eq!(wit.w_s_s2, el(&a2, &[1, 0]));
        assert_eq!(wit.w_prime, a2.identity());
        let b2 = CoxeterSystem::b(2);
        let wit = b2.sizig3_witness(0, el(&b2, &[1, 0, 1])).unwrap();
        assert_eq!((wit.s2, wit.w_prime), (1, b2.identity()));
        assert!(a2.sizig3_witness(0, a2.identity()).is_err());
    }

    #[test]
    fn coset_in_half_examples() {
        let a2 = CoxeterSystem::a(2);
        let e = a2.identity();
        assert!(a2.coset_in_half(genset(&[1]), e, 0).unwrap());
        assert!(!a2.coset_in_half(genset(&[0]), e, 0).unwrap());
        assert_eq!(
            a2.simple_support(el(&a2, &[1, 0, 1])).unwrap(),
            [0, 1].into_iter().collect()
        );
        assert!(a2.simple_support(el(&a2, &[0, 1])).is_err());
    }

    #[test]
    fn geodesic_obstruction_example() {
        let a2 = CoxeterSystem::a(2);
        assert!(a2
            .geodesic_obstruction_check(el(&a2, &[1]), a2.identity(), 0)
            .unwrap());
        assert!(a2.geodesic_obstruction_check(a2.w0(), a2.w0(), 0).unwrap());
    }
}
