//! Randomized invariants.

use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use coxglue::braidrep::{induce, parabolic_system, validate, BraidRepresentation};
use coxglue::cli::run_args;
use coxglue::coxeter::{genset, CoxeterSystem, Side};
use coxglue::exact::parse::parse_laurent;
use coxglue::exact::{q, reduce_mod, Field, Fp, LaurentPoly, Matrix, Poly, Ring, Q};
use coxglue::kwglue::is_good;
use coxglue::simplicial::{homlem_conclusion_holds, random_instance};

const LABELS: [&str; 5] = ["A2", "A3", "B2", "B3", "I2(5)"];

fn system(k: usize) -> CoxeterSystem {
    CoxeterSystem::from_label(LABELS[k]).unwrap()
}

fn int_matrix(entries: &[i64], n: usize) -> Matrix<Q> {
    Matrix::from_fn(&(), n, n, |r, c| q(entries[r * n + c]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exchange_property(k in 0..LABELS.len(), idx in 0usize..48, s in 0usize..3) {
        let sys = system(k);
        let w = sys.element(idx % sys.order());
        let s = s % sys.rank();
        let (l, ls) = (sys.length(w), sys.length(sys.mul_gen(w, s)));
        prop_assert!(ls == l + 1 || ls + 1 == l);
        prop_assert_eq!(sys.length(sys.inv(w)), l);
        prop_assert_eq!(sys.from_word(&sys.normal_form(w)).unwrap(), w);
    }

    #[test]
    fn half_sets_partition(k in 0..LABELS.len(), s in 0usize..3) {
        let sys = system(k);
        let s = s % sys.rank();
        let half = sys.half_set(s, Side::Right);
        prop_assert_eq!(half.len() * 2, sys.order());
        for &w in &half {
            prop_assert!(!half.contains(&sys.mul_gen(w, s)));
        }
        prop_assert!(sys.is_convex(&half));
    }

    #[test]
    fn inverse_is_two_sided(n in 1usize..5, entries in prop::collection::vec(-4i64..=4, 16)) {
        let m = int_matrix(&entries, n);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(&(), n));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(&(), n));
            }
            None => prop_assert!(m.rank() < n),
        }
        prop_assert_eq!(m.rank() + m.kernel().dim(), n);
    }

    #[test]
    fn prime_field_inverses(a in 1i64..1000, p in prop::sample::select(vec![2u64, 3, 5, 101, 65521])) {
        let x = Fp::new(a, p);
        match x.inv() {
            Some(y) => prop_assert_eq!(x.mul(&y).value(), 1),
            None => prop_assert_eq!(a % p as i64, 0),
        }
    }

    #[test]
    fn laurent_display_round_trips(terms in prop::collection::vec((-6i64..=6, -5i64..=5), 0..6)) {
        let f = LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, q(c))));
        prop_assert_eq!(parse_laurent(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn residues_are_multiplicative(
        a in prop::collection::vec(-4i64..=4, 1..6),
        b in prop::collection::vec(-4i64..=4, 1..6),
    ) {
        let phi6 = Poly::from_i64s(&(), &[1, -1, 1]);
        let (pa, pb) = (Poly::from_i64s(&(), &a), Poly::from_i64s(&(), &b));
        let lhs = reduce_mod(&LaurentPoly::from_poly(&pa.mul(&pb)), &phi6).unwrap().residue;
        let ra = reduce_mod(&LaurentPoly::from_poly(&pa), &phi6).unwrap().residue;
        let rb = reduce_mod(&LaurentPoly::from_poly(&pb), &phi6).unwrap().residue;
        prop_assert_eq!(lhs, ra.mul(&rb).rem(&phi6).unwrap());
    }

    #[test]
    fn one_generator_reps_are_good(n in 1usize..5, entries in prop::collection::vec(-3i64..=3, 16)) {
        let m = int_matrix(&entries, n);
        prop_assume!(m.is_invertible());
        let sys = Arc::new(CoxeterSystem::from_label("A1").unwrap());
        let rep = BraidRepresentation::new(sys, &(), n, vec![m]).unwrap();
        prop_assert!(is_good(&rep).good);
    }

    #[test]
    fn induction_multiplies_dimension(k in 0..LABELS.len(), num in 1i64..6, den in 1i64..4) {
        let sys = Arc::new(system(k));
        let j = genset(&[0]);
        let sub = Arc::new(parabolic_system(&sys, j).unwrap());
        let lambda = Q::new(num.into(), den.into());
        let rep0 = BraidRepresentation::scalar(sub, &(), 1, &[lambda]).unwrap();
        let ind = induce(&rep0, sys.clone(), j).unwrap();
        prop_assert_eq!(ind.rep.dim(), sys.order() / 2);
        prop_assert!(validate(&sys, ind.rep.dim(), ind.rep.gens()).ok());
    }

    #[test]
    fn coefficient_systems_under_hypothesis_are_acyclic(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_instance(&mut rng, true);
        prop_assert!(inst.hypothesis_holds());
        prop_assert!(homlem_conclusion_holds::<Q>(&(), &inst));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn reports_are_deterministic(seed in any::<u64>()) {
        let seed = seed.to_string();
        let args = ["coxglue", "glue", "simples", "--builtin", "bounce-A1", "--seed", &seed, "--format", "json"];
        prop_assert_eq!(run_args(args), run_args(args));
        let fuzz = ["coxglue", "homlem-fuzz", "--count", "10", "--seed", &seed, "--format", "json"];
        prop_assert_eq!(run_args(fuzz), run_args(fuzz));
    }
}
