use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::datum::{bounce_datum, product_datum, scalar_pair_datum, triangular_datum, two_site_datum};
use super::*;
use crate::coxeter::CoxeterSystem;
use crate::exact::{Fp, IntegerLattice, Matrix, Ring};

const P: u64 = DEFAULT_PRIME;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(7)
}

#[test]
fn triangular_matches_upper_triangular_matrices() {
    let ga = triangular_datum(P).assemble().unwrap();
    assert_eq!(ga.dim(), 3);
    // Basis order e_0, x_01, e_1 against E11, E12, E22.
    let mats: Vec<Matrix<Fp>> = [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [0, 1]]]
        .iter()
        .map(|m| Matrix::from_fn(&P, 2, 2, |r, c| Fp::new(m[r][c], P)))
        .collect();
    for g in 0..3 {
        for h in 0..3 {
            let prod = ga.basis_product(g, h);
            let mut expect = Matrix::zeros(&P, 2, 2);
            for (t, c) in prod.iter().enumerate() {
                expect = expect.add(&mats[t].scale(c));
            }
            assert_eq!(mats[g].mul(&mats[h]), expect, "product of {g} and {h}");
        }
    }
}

#[test]
fn product_and_single_site() {
    let ga = product_datum(P).assemble().unwrap();
    assert_eq!(ga.dim(), 4);
    let list = simple_modules(ga.algebra(), DEFAULT_CAP, &mut rng()).unwrap();
    assert_eq!(list.simples.len(), 4);
    let one = GluingDatum {
        prime: P,
        sites: vec![Site::split(2)],
        bimodules: vec![],
        compositions: vec![],
        coxeter: None,
    };
    let ga = one.assemble().unwrap();
    assert_eq!(ga.dim(), 2);
    assert_eq!(ga.algebra().left(0), ga.site(0).left(0));
}

#[test]
fn associativity_failure_is_reported() {
    let err = scalar_pair_datum(P, 1, 2).assemble().unwrap_err();
    assert!(matches!(err, GlueError::AssociativityFailure { .. }), "{err}");
    assert!(scalar_pair_datum(P, 3, 3).assemble().is_ok());
}

#[test]
fn malformed_data_are_rejected() {
    let mut d = triangular_datum(P);
    d.bimodules[0].left.clear();
    assert!(matches!(d.assemble(), Err(GlueError::Shape(_))));
    let mut d = triangular_datum(P);
    d.prime = 100;
    assert!(matches!(d.assemble(), Err(GlueError::NotPrime { p: 100 })));
}

#[test]
fn simple_counts() {
    let mut r = rng();
    let tri = triangular_datum(P).assemble().unwrap();
    let list = simple_modules(tri.algebra(), DEFAULT_CAP, &mut r).unwrap();
    assert_eq!(list.simples.iter().map(Module::dim).collect::<Vec<_>>(), vec![1, 1]);
    assert!(list.accounts_for(tri.algebra()));
    let mat = scalar_pair_datum(P, 1, 1).assemble().unwrap();
    let list = simple_modules(mat.algebra(), DEFAULT_CAP, &mut r).unwrap();
    assert_eq!(list.simples.iter().map(Module::dim).collect::<Vec<_>>(), vec![2]);
    let split = Site::split(2);
    let d = GluingDatum {
        prime: P,
        sites: vec![split],
        bimodules: vec![],
        compositions: vec![],
        coxeter: None,
    };
    let list = simple_modules(d.assemble().unwrap().algebra(), DEFAULT_CAP, &mut r).unwrap();
    assert_eq!(list.simples.len(), 2);
}

#[test]
fn cap_is_enforced() {
    let ga = product_datum(P).assemble().unwrap();
    assert_eq!(
        simple_modules(ga.algebra(), 3, &mut rng()).unwrap_err(),
        GlueError::CapExceeded { dim: 4, cap: 3 }
    );
}

#[test]
fn triangular_extensions() {
    let ga = triangular_datum(P).assemble().unwrap();
    let t = ga.site(1).regular_module();
    let shriek = extend_shriek(&ga, 1, &t);
    assert_eq!(shriek.dim(), 2);
    assert!(shriek.is_module_of(ga.algebra()));
    assert_eq!(restrict(&ga, &shriek, 0).dim(), 1);
    assert_eq!(restrict(&ga, &shriek, 1).dim(), 1);
    // j_* of the simple at site 1 has nothing at site 0 since M_10 = 0.
    let star = extend_star(&ga, 1, &t);
    assert_eq!(star.dim(), 1);
    let me = middle_extension(&ga, 1, &t);
    assert_eq!(me.dim(), 1);
    assert!(is_simple(ga.algebra(), &me, &mut rng()).unwrap());
    assert!(simples_isomorphic(ga.site(1), &restrict(&ga, &me, 1), &t));
    // From site 0: j_! is the simple, j_* is the two-dimensional injective.
    let t0 = ga.site(0).regular_module();
    assert_eq!(extend_shriek(&ga, 0, &t0).dim(), 1);
    assert_eq!(extend_star(&ga, 0, &t0).dim(), 2);
    assert_eq!(mu(&ga, 0, &t0).rank(), 1);
}

#[test]
fn product_extension_is_concentrated() {
    let ga = product_datum(P).assemble().unwrap();
    let a = ga.site(0).regular_module();
    let m = extend_shriek(&ga, 0, &a);
    assert_eq!(m.dim(), 2);
    assert_eq!(restrict(&ga, &m, 0).dim(), 2);
    assert_eq!(restrict(&ga, &m, 1).dim(), 0);
    assert_eq!(restrict(&ga, &m, 2).dim(), 0);
}

fn shipped() -> Vec<GluingDatum> {
    ["product", "triangular", "two-site", "two-site-zero", "matrix", "full-A1", "bounce-A1"]
        .iter()
        .map(|n| builtin(n, P).unwrap())
        .collect()
}

#[test]
fn adjunctions_on_simples_and_regular_modules() {
    let mut r = rng();
    for d in shipped() {
        let ga = d.assemble().unwrap();
        let mut bs = simple_modules(ga.algebra(), DEFAULT_CAP, &mut r).unwrap().simples;
        bs.push(ga.algebra().regular_module());
        for k in 0..ga.n() {
            let mut as_ = simple_modules(ga.site(k), DEFAULT_CAP, &mut r).unwrap().simples;
            as_.push(ga.site(k).regular_module());
            for a in &as_ {
                let sh = extend_shriek(&ga, k, a);
                let st = extend_star(&ga, k, a);
                assert!(sh.is_module_of(ga.algebra()) && st.is_module_of(ga.algebra()));
                // The components of j_! are M_ik ⊗ A.
                for i in 0..ga.n() {
                    assert!(restrict(&ga, &sh, i).dim() <= ga.block_dim(i, k) * a.dim());
                }
                for b in &bs {
                    let rep = adjunction_check(&ga, k, a, b);
                    assert!(rep.ok(), "{d:?} site {k}: {rep:?}");
                }
            }
        }
    }
}

#[test]
fn k0_on_shipped_data() {
    for d in shipped() {
        let rep = k0_verify(&d, 3, DEFAULT_CAP).unwrap();
        assert!(rep.ok(), "{rep:?}");
    }
}

#[test]
fn k0_triangular_is_everything() {
    let rep = k0_verify(&triangular_datum(P), 1, DEFAULT_CAP).unwrap();
    assert_eq!(IntegerLattice::from_generators(2, &rep.k_phi).unwrap(), IntegerLattice::full(2));
    assert_eq!(rep.classes.len(), 2);
}

#[test]
fn k0_two_site_by_brute_force() {
    // Sites k × k (classes a, b) and k (class z). With nonzero compositions
    // the only constraint is z = a.
    // The simples of k × k come in discovery order. T_a is the one on which
    // the ideal ν_010(M_01 ⊗ M_10) = k f_a acts, so it is missing from K_01.
    let rep = k0_verify(&two_site_datum(P, 1), 1, DEFAULT_CAP).unwrap();
    let killed = &rep.k_ij.iter().find(|(ij, _)| *ij == (0, 1)).unwrap().1;
    assert_eq!(killed.len(), 1);
    let ia = 1 - killed[0];
    let lat = IntegerLattice::from_generators(3, &rep.k_phi).unwrap();
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            for z in -2i64..=2 {
                let v: Vec<BigInt> = [a, b, z].iter().map(|&x| BigInt::from(x)).collect();
                assert_eq!(lat.contains(&v).unwrap(), z == [a, b][ia], "({a},{b},{z})");
            }
        }
    }
    assert_eq!(rep.simple_dims, vec![1, 2]);
    // Zero compositions: no constraint at all.
    let rep = k0_verify(&two_site_datum(P, 0), 1, DEFAULT_CAP).unwrap();
    assert_eq!(IntegerLattice::from_generators(3, &rep.k_phi).unwrap(), IntegerLattice::full(3));
    assert!(rep.ok());
}

#[test]
fn non_projective_bimodule_is_rejected() {
    // R_1 = k[ε]/ε², M_01 = k with ε acting by zero.
    let dual_numbers = Site {
        dim: 2,
        unit: vec![1, 0],
        mult: vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
    };
    let d = GluingDatum {
        prime: P,
        sites: vec![Site::field(), dual_numbers],
        bimodules: vec![Bimodule {
            i: 0,
            j: 1,
            dim: 1,
            left: vec![vec![vec![1]]],
            right: vec![vec![vec![1]], vec![vec![0]]],
        }],
        compositions: vec![],
        coxeter: None,
    };
    assert_eq!(
        k0_verify(&d, 1, DEFAULT_CAP).unwrap_err(),
        GlueError::DerivedCorrectionRequired { i: 0, j: 1 }
    );
}

#[test]
fn restriction_of_simples_is_simple_or_zero() {
    let mut r = rng();
    for d in shipped() {
        let ga = d.assemble().unwrap();
        for s in simple_modules(ga.algebra(), DEFAULT_CAP, &mut r).unwrap().simples {
            for i in 0..ga.n() {
                let m = restrict(&ga, &s, i);
                assert!(m.dim() == 0 || is_simple(ga.site(i), &m, &mut r).unwrap());
            }
        }
    }
}

fn random_hom(alg: &Algebra, a: &Module, b: &Module, r: &mut ChaCha8Rng) -> Matrix<Fp> {
    let basis = hom_space(alg, a, b);
    let mut f = Matrix::zeros(&P, b.dim(), a.dim());
    for h in basis {
        f = f.add(&h.scale(&Fp::new(r.gen_range(0..P as i64), P)));
    }
    f
}

#[test]
fn kernels_and_cokernels_are_componentwise() {
    let mut r = rng();
    for d in shipped() {
        let ga = d.assemble().unwrap();
        let reg = ga.algebra().regular_module();
        for _ in 0..3 {
            let f = random_hom(ga.algebra(), &reg, &reg, &mut r);
            let ker = f.kernel();
            assert!(reg.is_submodule(&ker));
            let img = f.image();
            assert!(reg.is_submodule(&img));
            for i in 0..ga.n() {
                let e = reg.act(&ga.idempotent(i));
                // e_i V and the kernel of f on it.
                let site = e.image();
                let fe = f.mul(&site.basis().transpose());
                assert_eq!(restrict(&ga, &reg.submodule(&ker), i).dim(), site.dim() - fe.rank());
                // Cokernel component: e_i(V / im f) = e_i V / f(e_i V).
                assert_eq!(restrict(&ga, &reg.quotient(&img), i).dim(), site.dim() - fe.rank());
            }
        }
    }
}

#[test]
fn w_gluing_check() {
    let a2 = CoxeterSystem::from_label("A2").unwrap();
    let full = builtin("full-A2", P).unwrap();
    let rep = full.check_w_gluing(&a2).unwrap();
    assert!(rep.ok());
    assert!(rep.checked > 0);
    assert!(builtin("bounce-A2", P).unwrap().check_w_gluing(&a2).unwrap().ok());
    // All compositions zero: associative, but no ν is invertible.
    let mut dead = full.clone();
    for c in &mut dead.compositions {
        c.table = vec![vec![vec![0]]];
    }
    assert!(!dead.check_w_gluing(&a2).unwrap().ok());
}

#[test]
fn full_gluing_has_whole_support() {
    let rep = support_scan(&builtin("full-A2", P).unwrap(), 1, DEFAULT_CAP).unwrap();
    assert_eq!(rep.simples.len(), 1);
    assert!(rep.simples[0].whole);
    assert!(rep.ok());
}

#[test]
fn bounce_supports_are_proper_and_convex() {
    let rep = support_scan(&builtin("bounce-A2", P).unwrap(), 1, DEFAULT_CAP).unwrap();
    assert!(rep.ok(), "{:?}", rep.simples);
    assert!(rep.simples.iter().any(|s| !s.whole));
    assert!(rep.simples.iter().all(|s| s.convex));
}

#[test]
fn rank_one_supports() {
    let a1 = CoxeterSystem::from_label("A1").unwrap();
    for walls in [vec![], vec![a1.gen(0)]] {
        let rep = support_scan(&bounce_datum(&a1, P, &walls), 1, DEFAULT_CAP).unwrap();
        assert!(rep.ok());
        for s in &rep.simples {
            assert!(!s.support.is_empty() && s.support.len() <= 2);
        }
    }
}

#[test]
fn datum_round_trips_through_json() {
    let d = builtin("two-site", P).unwrap();
    let text = serde_json::to_string(&d).unwrap();
    let back: GluingDatum = serde_json::from_str(&text).unwrap();
    assert_eq!(back, d);
    let bad = builtin("nope", P).unwrap_err();
    assert_eq!(bad, GlueError::UnknownBuiltin("nope".into()));
    assert_eq!(Fp::zero(&P), Fp::new(P as i64, P));
}

#[test]
fn bounce_splits_along_the_wall() {
    let d = builtin("bounce-A2", P).unwrap();
    let rep = support_scan(&d, 1, DEFAULT_CAP).unwrap();
    let sys = &rep.system;
    let wall = sys.gen(0);
    assert_eq!(rep.simples.len(), 2);
    // The two supports are the two sides of the killed wall.
    let mut sides: Vec<Vec<_>> = rep.simples.iter().map(|s| s.support.clone()).collect();
    sides.sort();
    let below: Vec<_> = sys.elements().filter(|&w| sys.length(sys.mul(w, wall)) < sys.length(w)).collect();
    let above: Vec<_> = sys.elements().filter(|&w| sys.length(sys.mul(w, wall)) > sys.length(w)).collect();
    let mut expect = vec![below, above];
    expect.sort();
    assert_eq!(sides, expect);
    assert!(k0_verify(&d, 1, DEFAULT_CAP).unwrap().ok());
}
