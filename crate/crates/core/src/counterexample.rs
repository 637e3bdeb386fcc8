//! The length matrix `M_{w,w'} = (−u)^{ℓ(w' w⁻¹)}` and the obstruction to
//! solving `M E = p_G · I` over `ℤ[u, u⁻¹]`.
//!
//! `M` is the group matrix of `W` specialized at `x_w = (−u)^{ℓ(w)}` and
//! permuted, so `det M` is divisible by the factors of the trivial and the
//! sign character, `Σ u^{ℓ(w)}` and `Σ (−u)^{ℓ(w)}`. Taking determinants,
//! a solution forces `det M | p_G^{|W|}`, so every irreducible factor of
//! those two polynomials must divide `p_G`. For `A2` the signed factor
//! vanishes at a primitive sixth root of unity while
//! `p_{SL3} = (1 − u²)(1 − u³)` does not.

use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterSystem};
use crate::exact::{reduce_mod, ExactError, LaurentPoly, Matrix, Poly, RatFunc, Ring, Q};

/// Largest group for which `det M` is computed.
pub const DEFAULT_ORDER_CAP: usize = 48;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CounterError {
    #[error("group of order {order} is above the determinant cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("expected a {expected}x{expected} table, found {rows}x{cols}")]
    SizeMismatch { expected: usize, rows: usize, cols: usize },
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn q_int(n: i64) -> Q {
    Q::from_i64(&(), n)
}

/// `(−u)^k`.
fn neg_u_pow(k: usize) -> LaurentPoly {
    LaurentPoly::monomial(q_int(if k % 2 == 0 { 1 } else { -1 }), k as i64)
}

pub fn build_m(sys: &CoxeterSystem) -> Matrix<LaurentPoly> {
    let els: Vec<_> = sys.elements().collect();
    Matrix::from_fn(&(), els.len(), els.len(), |r, c| {
        neg_u_pow(sys.length(sys.mul(els[c], sys.inv(els[r]))))
    })
}

/// `Σ u^{ℓ(w)}`, or `Σ (−u)^{ℓ(w)}` when `signed`.
pub fn poincare(sys: &CoxeterSystem, signed: bool) -> LaurentPoly {
    sys.elements().fold(LaurentPoly::zero(&()), |acc, w| {
        let l = sys.length(w);
        let term = if signed {
            neg_u_pow(l)
        } else {
            LaurentPoly::monomial(q_int(1), l as i64)
        };
        acc.add(&term)
    })
}

/// `∏ (1 − u^{e})` over the degrees `e` of the group whose Weyl group has
/// the given label, for the labels in the built-in table.
pub fn group_poincare(label: &str) -> Option<LaurentPoly> {
    let degrees: &[i64] = match label {
        "A1" => &[2],
        "A2" => &[2, 3],
        _ => return None,
    };
    Some(degrees.iter().fold(LaurentPoly::one(&()), |acc, &e| {
        acc.mul(&LaurentPoly::from_terms([(0, q_int(1)), (e, q_int(-1))]))
    }))
}

/// Name of the group in the built-in table.
pub fn group_name(label: &str) -> Option<&'static str> {
    match label {
        "A1" => Some("SL2"),
        "A2" => Some("SL3"),
        _ => None,
    }
}

/// `u² − u + 1`, vanishing at the primitive sixth roots of unity.
pub fn phi6() -> Poly<Q> {
    Poly::from_i64s(&(), &[1, -1, 1])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Some character factor has an irreducible factor not dividing `p_G`.
    Unsolvable,
    /// Every irreducible factor of both character factors divides `p_G`.
    NoObstruction,
    /// No `p_G` was available.
    NotDecided,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ObstructionReport {
    pub label: String,
    pub order: usize,
    pub poincare: LaurentPoly,
    pub signed_poincare: LaurentPoly,
    pub det_m: LaurentPoly,
    pub divisible_by_poincare: bool,
    pub divisible_by_signed: bool,
    pub divisible_by_product: bool,
    /// `det M / (Σ u^ℓ · Σ (−u)^ℓ)` when the division is exact.
    pub cofactor: Option<LaurentPoly>,
    pub group: Option<String>,
    pub p_g: Option<LaurentPoly>,
    /// Residues modulo `u² − u + 1` of `det M` and `p_G`.
    pub det_mod_phi6: Poly<Q>,
    pub p_g_mod_phi6: Option<Poly<Q>>,
    /// Part of each character factor coprime to `p_G`, up to units.
    pub coprime_parts: Vec<LaurentPoly>,
    pub verdict: Verdict,
}

/// The part of `f` sharing no factor with `g`, up to a unit.
fn coprime_part(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly, ExactError> {
    let mut h = f.clone();
    loop {
        let d = h.poly_gcd(g);
        if d.max_exp().unwrap_or(0) == 0 {
            let (_, p) = h.split_valuation();
            return Ok(LaurentPoly::from_poly(&p.monic()));
        }
        h = h.poly_divrem(&d)?.0;
    }
}

/// Determinant, both character factors, the residues modulo `Φ₆`, and the
/// verdict against `p_G` (from the table, unless `p_g` is given).
pub fn divisibility_analysis(
    sys: &CoxeterSystem,
    p_g: Option<LaurentPoly>,
    cap: usize,
) -> Result<ObstructionReport, CounterError> {
    if sys.order() > cap {
        return Err(CounterError::CapExceeded { order: sys.order(), cap });
    }
    let label = sys.label().unwrap_or("custom").to_owned();
    let det_m = build_m(sys).det_laurent()?;
    let pu = poincare(sys, false);
    let ps = poincare(sys, true);
    let product = pu.mul(&ps);
    let divisible_by_product = product.divides(&det_m)?;
    let cofactor = if divisible_by_product {
        Some(det_m.poly_divrem(&product)?.0)
    } else {
        None
    };
    let group = group_name(&label).map(str::to_owned);
    let p_g = p_g.or_else(|| group_poincare(&label));
    let phi = phi6();
    let det_mod_phi6 = reduce_mod(&det_m, &phi)?.residue;
    let p_g_mod_phi6 = p_g.as_ref().map(|p| reduce_mod(p, &phi)).transpose()?.map(|r| r.residue);
    let (coprime_parts, verdict) = match &p_g {
        Some(p) => {
            let parts = [&pu, &ps]
                .into_iter()
                .map(|f| coprime_part(f, p))
                .collect::<Result<Vec<_>, _>>()?;
            let blocked = parts.iter().any(|h| h.max_exp().unwrap_or(0) > 0);
            (parts, if blocked { Verdict::Unsolvable } else { Verdict::NoObstruction })
        }
        None => (Vec::new(), Verdict::NotDecided),
    };
    Ok(ObstructionReport {
        label,
        order: sys.order(),
        divisible_by_poincare: pu.divides(&det_m)?,
        divisible_by_signed: ps.divides(&det_m)?,
        divisible_by_product,
        poincare: pu,
        signed_poincare: ps,
        det_m,
        cofactor,
        group,
        p_g,
        det_mod_phi6,
        p_g_mod_phi6,
        coprime_parts,
        verdict,
    })
}

/// Whether `M E = p_G · I` for a candidate table `E`.
pub fn euler_consistency(
    sys: &CoxeterSystem,
    e: &Matrix<LaurentPoly>,
    p_g: &LaurentPoly,
) -> Result<bool, CounterError> {
    let n = sys.order();
    if e.nrows() != n || e.ncols() != n {
        return Err(CounterError::SizeMismatch {
            expected: n,
            rows: e.nrows(),
            cols: e.ncols(),
        });
    }
    Ok(build_m(sys).mul(e) == Matrix::scalar(&(), n, p_g))
}

/// `E = p_G · M⁻¹` over `ℚ(u)`.
pub fn rational_solution(sys: &CoxeterSystem, p_g: &LaurentPoly) -> Option<Matrix<RatFunc>> {
    let m = build_m(sys).map(&(), RatFunc::from_laurent);
    let inv = m.inverse()?;
    Some(inv.scale(&RatFunc::from_laurent(p_g)))
}

/// The rational solution, if all its entries are Laurent polynomials.
pub fn laurent_solution(sys: &CoxeterSystem, p_g: &LaurentPoly) -> Option<Matrix<LaurentPoly>> {
    let e = rational_solution(sys, p_g)?;
    let mut out = Matrix::zeros(&(), e.nrows(), e.ncols());
    for r in 0..e.nrows() {
        for c in 0..e.ncols() {
            let f = e.get(r, c);
            let den = f.den();
            // Denominators are monic, so a Laurent entry has den = u^k.
            let k = den.degree()?;
            if den != &Poly::monomial(q_int(1), k) {
                return None;
            }
            out.set(r, c, LaurentPoly::from_poly(f.num()).shift(-(k as i64)));
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_laurent;

    fn l(s: &str) -> LaurentPoly {
        parse_laurent(s).unwrap()
    }

    fn a(n: usize) -> CoxeterSystem {
        CoxeterSystem::from_label(&format!("A{n}")).unwrap()
    }

    #[test]
    fn rank_one_matrix() {
        let m = build_m(&a(1));
        assert_eq!(m, Matrix::from_rows(&(), 2, vec![vec![l("1"), l("-u")], vec![l("-u"), l("1")]]).unwrap());
        assert_eq!(m.det_laurent().unwrap(), l("1-u^2"));
    }

    #[test]
    fn a2_matrix_entries_and_symmetry() {
        let sys = a(2);
        let m = build_m(&sys);
        let allowed = [l("1"), l("-u"), l("u^2"), l("-u^3")];
        for r in 0..6 {
            assert_eq!(m.get(r, r), &l("1"));
            for c in 0..6 {
                assert!(allowed.contains(m.get(r, c)));
                assert_eq!(m.get(r, c), m.get(c, r));
            }
        }
    }

    #[test]
    fn poincare_values() {
        assert_eq!(poincare(&a(2), false), l("1+2u+2u^2+u^3"));
        assert_eq!(poincare(&a(2), true), l("1-2u+2u^2-u^3"));
        assert_eq!(poincare(&a(1), false), l("1+u"));
    }

    #[test]
    fn a2_is_unsolvable() {
        let rep = divisibility_analysis(&a(2), None, DEFAULT_ORDER_CAP).unwrap();
        assert!(rep.divisible_by_poincare && rep.divisible_by_signed && rep.divisible_by_product);
        assert!(rep.det_mod_phi6.is_zero());
        assert_eq!(rep.p_g_mod_phi6, Some(Poly::from_i64s(&(), &[4, -2])));
        assert_eq!(rep.verdict, Verdict::Unsolvable);
        // The obstruction is exactly Φ₆, inside the signed factor.
        assert_eq!(rep.coprime_parts[1], LaurentPoly::from_poly(&phi6()));
        assert_eq!(rep.coprime_parts[0], l("1"));
    }

    #[test]
    fn rank_one_has_no_obstruction() {
        let rep = divisibility_analysis(&a(1), None, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(rep.cofactor, Some(l("1")));
        assert_eq!(rep.verdict, Verdict::NoObstruction);
        assert!(!rep.det_mod_phi6.is_zero());
    }

    #[test]
    fn b2_and_a3_divisibility() {
        for label in ["B2", "A3"] {
            let sys = CoxeterSystem::from_label(label).unwrap();
            let rep = divisibility_analysis(&sys, None, DEFAULT_ORDER_CAP).unwrap();
            assert!(rep.divisible_by_product, "{label}");
            assert_eq!(rep.verdict, Verdict::NotDecided);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = divisibility_analysis(&a(3), None, 10).unwrap_err();
        assert_eq!(err, CounterError::CapExceeded { order: 24, cap: 10 });
    }

    #[test]
    fn consistency_checks() {
        let sys = a(1);
        let p = l("1-u^2");
        let e = Matrix::from_rows(&(), 2, vec![vec![l("1"), l("u")], vec![l("u"), l("1")]]).unwrap();
        assert!(euler_consistency(&sys, &e, &p).unwrap());
        assert_eq!(laurent_solution(&sys, &p), Some(e));
        assert!(!euler_consistency(&sys, &Matrix::zeros(&(), 2, 2), &p).unwrap());
        assert!(euler_consistency(&sys, &Matrix::zeros(&(), 2, 2), &l("0")).unwrap());
        assert!(matches!(
            euler_consistency(&sys, &Matrix::zeros(&(), 3, 3), &p),
            Err(CounterError::SizeMismatch { expected: 2, .. })
        ));
        // For A2 the rational solution exists but is not Laurent.
        let sys = a(2);
        let p = group_poincare("A2").unwrap();
        let e = rational_solution(&sys, &p).unwrap();
        let m = build_m(&sys).map(&(), RatFunc::from_laurent);
        assert_eq!(m.mul(&e), Matrix::scalar(&(), 6, &RatFunc::from_laurent(&p)));
        assert!(laurent_solution(&sys, &p).is_none());
    }
}
