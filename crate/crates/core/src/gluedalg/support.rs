//! Supports of simple modules for gluings indexed by a finite Coxeter group.
//!
//! For a simple `S`, `Supp(S) = {w : e_w S ≠ 0}`. Either it is all of `W`,
//! or it is an intersection of right translates `P_i x` of the half-sets
//! `P_i = {w : ℓ(w s_i) > ℓ(w)}`, hence convex.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coxeter::{CoxeterSystem, GroupElement, Side};

use super::algebra::simple_modules;
use super::datum::GluingDatum;
use super::functors::restrict;
use super::GlueError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleSupport {
    pub dim: usize,
    pub support: Vec<GroupElement>,
    pub whole: bool,
    /// The support is one of the intersections of translates `P_i x`.
    pub translate_intersection: bool,
    pub convex: bool,
}

impl SimpleSupport {
    pub fn ok(&self) -> bool {
        self.whole || (self.translate_intersection && self.convex)
    }
}

#[derive(Debug)]
pub struct SupportReport {
    pub system: CoxeterSystem,
    /// Number of `(w, w', x)` triples whose composition was checked to be
    /// bijective.
    pub w_gluing_checked: usize,
    /// Number of distinct intersections of translates `P_i x`.
    pub intersections: usize,
    pub simples: Vec<SimpleSupport>,
}

impl SupportReport {
    pub fn ok(&self) -> bool {
        self.simples.iter().all(SimpleSupport::ok)
    }
}

/// All nonempty intersections of the sets `P_i x`, as bitmasks over the
/// ShortLex index.
pub fn translate_intersections(sys: &CoxeterSystem) -> BTreeSet<u128> {
    let mut family = BTreeSet::new();
    for i in 0..sys.rank() {
        let half = sys.half_set(i, Side::Right);
        for x in sys.elements() {
            let mask = half
                .iter()
                .fold(0u128, |m, &p| m | 1u128 << sys.mul(p, x).index());
            family.insert(mask);
        }
    }
    let mut closure = family.clone();
    let mut frontier: Vec<u128> = family.iter().copied().collect();
    while let Some(a) = frontier.pop() {
        for &b in &family {
            let c = a & b;
            if c != 0 && closure.insert(c) {
                frontier.push(c);
            }
        }
    }
    closure
}

pub fn support_scan(datum: &GluingDatum, seed: u64, cap: usize) -> Result<SupportReport, GlueError> {
    let label = datum
        .coxeter
        .as_deref()
        .ok_or_else(|| GlueError::NotWGluing("the datum names no Coxeter system".into()))?;
    let sys = CoxeterSystem::from_label(label)?;
    if sys.order() > 128 {
        return Err(GlueError::CapExceeded { dim: sys.order(), cap: 128 });
    }
    let wg = datum.check_w_gluing(&sys)?;
    if let Some(&(w, w2, x)) = wg.failures.first() {
        return Err(GlueError::NotWGluing(format!(
            "composition for ({}, {}) at site {} is not bijective",
            sys.format_element(w),
            sys.format_element(w2),
            sys.format_element(x)
        )));
    }
    let ga = datum.assemble()?;
    let family = translate_intersections(&sys);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let simples = simple_modules(ga.algebra(), cap, &mut rng)?;
    let whole_mask = if sys.order() == 128 { u128::MAX } else { (1u128 << sys.order()) - 1 };
    let reports = simples
        .simples
        .iter()
        .map(|s| {
            let support: Vec<GroupElement> = sys
                .elements()
                .filter(|w| restrict(&ga, s, w.index()).dim() > 0)
                .collect();
            let mask = support.iter().fold(0u128, |m, w| m | 1u128 << w.index());
            SimpleSupport {
                dim: s.dim(),
                whole: mask == whole_mask,
                translate_intersection: family.contains(&mask),
                convex: sys.is_convex(&support),
                support,
            }
        })
        .collect();
    Ok(SupportReport {
        system: sys,
        w_gluing_checked: wg.checked,
        intersections: family.len(),
        simples: reports,
    })
}
