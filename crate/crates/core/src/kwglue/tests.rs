use std::sync::Arc;

use super::*;
use crate::braidrep::{a2_block, b2_block, hecke_regular};
use crate::coxeter::genset;
use crate::exact::{q, qf, Q};

fn sys(label: &str) -> Arc<CoxeterSystem> {
    Arc::new(CoxeterSystem::from_label(label).unwrap())
}

fn scalar_rep(label: &str, v: i64) -> BraidRepresentation<Q> {
    let s = sys(label);
    let r = s.rank();
    BraidRepresentation::scalar(s, &(), 1, &vec![q(v); r]).unwrap()
}

fn qv(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

#[test]
fn v_s_examples() {
    assert!(v_s(&scalar_rep("A1", 1), 0).is_zero());
    assert!(v_s(&scalar_rep("A1", 2), 0).is_full());
    let s = sys("A1");
    let m = Matrix::from_i64_rows(&(), &[&[2, 0], &[0, -1]]);
    let rep = BraidRepresentation::new(s, &(), 2, vec![m]).unwrap();
    let vs = v_s(&rep, 0);
    assert_eq!(vs.dim(), 1);
    assert!(vs.contains(&qv(&[1, 0])).unwrap());
}

#[test]
fn v_w_examples() {
    let rep = scalar_rep("A2", -1);
    let s = rep.system().clone();
    assert!(v_w(&rep, s.identity(), 8).unwrap().is_zero());
    assert!(v_w(&rep, s.w0(), 8).unwrap().is_zero());
    let r1 = scalar_rep("A1", 2);
    assert_eq!(v_w(&r1, r1.system().gen(0), 8).unwrap(), v_s(&r1, 0));
}

#[test]
fn v_w_is_well_defined_and_monotone() {
    let s = sys("A2");
    let rep = hecke_regular(s.clone(), &(), &q(2)).unwrap();
    let all = all_v_w(&rep, DEFAULT_WORD_LIMIT).unwrap();
    for w in s.elements() {
        for t in 0..s.rank() {
            let wt = s.mul_gen(w, t);
            if s.length(wt) > s.length(w) {
                assert!(all[w.index()].is_subspace_of(&all[wt.index()]).unwrap());
            }
        }
    }
}

#[test]
fn augmentation_examples() {
    assert!(augmentation_check(&scalar_rep("A2", -1)).unwrap());
    assert!(augmentation_check(&scalar_rep("A1", 2)).unwrap());
    let rep = hecke_regular(sys("A2"), &(), &q(2)).unwrap();
    assert!(augmentation_check(&rep).unwrap());
}

#[test]
fn kw_dimensions_in_rank_one() {
    assert_eq!(kw_space(&scalar_rep("A1", 1)).dim(), 1);
    assert_eq!(kw_space(&scalar_rep("A1", 2)).dim(), 2);
}

#[test]
fn sections_in_rank_one() {
    let rep = scalar_rep("A1", 2);
    let s = rep.system().clone();
    let ie = section_i(&rep, s.identity());
    assert_eq!(ie.col(0), qv(&[1, 2]));
    let is = section_i(&rep, s.gen(0));
    assert_eq!(is.col(0), qv(&[2, 1]));
    let kw = kw_space(&rep);
    assert!(sections_check(&rep, &kw).unwrap());
}

#[test]
fn sections_land_in_kw_for_hecke_a2() {
    let rep = hecke_regular(sys("A2"), &(), &q(3)).unwrap();
    let kw = kw_space(&rep);
    assert!(kw.dim() >= rep.dim());
    assert!(sections_check(&rep, &kw).unwrap());
}

#[test]
fn coset_maps() {
    let rep = a2_block(sys("A2"), &(), &q(2), &q(-1)).unwrap();
    let s = rep.system().clone();
    let kw = kw_space(&rep);

    let whole = coset_space(&rep, s.all_gens(), s.identity());
    assert_eq!(whole.space, kw.space);
    let n = kw.ambient();
    let id: Matrix<Q> = Matrix::identity(&(), n);
    assert_eq!(coset_section(&rep, &whole), id);
    assert_eq!(coset_projection(&rep, &whole), id);

    for y in s.elements() {
        let single = coset_space(&rep, 0, y);
        assert_eq!(coset_section(&rep, &single), section_i(&rep, y));
    }

    for coset in s.right_cosets(genset(&[0])) {
        let cs = coset_space(&rep, genset(&[0]), coset[0]);
        let sec = coset_section(&rep, &cs);
        let proj = coset_projection(&rep, &cs);
        for v in cs.space.basis_vectors() {
            let image = sec.mul_vec(&v);
            assert!(kw.contains(&image).unwrap());
            assert_eq!(proj.mul_vec(&image), v);
        }
    }
}

#[test]
fn coset_space_dimension_matches_parabolic_kw() {
    // K_{W_J x} is a copy of K_{W_J}(V) for the restricted representation.
    let rep = hecke_regular(sys("A2"), &(), &q(2)).unwrap();
    let s = rep.system().clone();
    let j = genset(&[1]);
    let sub = Arc::new(crate::braidrep::parabolic_system(&s, j).unwrap());
    let restricted = crate::braidrep::restrict(&rep, sub, j).unwrap();
    let expected = kw_space(&restricted).dim();
    for coset in s.right_cosets(j) {
        assert_eq!(coset_space(&rep, j, coset[0]).space.dim(), expected);
    }
}

#[test]
fn iota_examples() {
    let rep = scalar_rep("A1", 2);
    let i = iota(&rep);
    assert_eq!(i.mul_vec(&qv(&[3, 5])), qv(&[10, 6]));
    let kw = kw_space(&rep);
    assert!(iota_check(&rep, &kw).unwrap());

    let triv = BraidRepresentation::<Q>::trivial(sys("A2"), &(), 1);
    let i = iota(&triv);
    assert_eq!(i.mul(&i), Matrix::identity(&(), 6));
    assert!(iota_check(&triv, &kw_space(&triv)).unwrap());
}

#[test]
fn euler_identity_examples() {
    let r1 = scalar_rep("A1", 2);
    assert!(euler_identity_check(&r1, &kw_space(&r1)));
    let triv = BraidRepresentation::<Q>::trivial(sys("A2"), &(), 1);
    assert!(euler_identity_check(&triv, &kw_space(&triv)));
    let hecke = hecke_regular(sys("A2"), &(), &q(2)).unwrap();
    assert!(euler_identity_check(&hecke, &kw_space(&hecke)));
    let b2 = b2_block(sys("B2"), &(), &q(2), &q(-1), &q(2), &q(1)).unwrap();
    assert!(euler_identity_check(&b2, &kw_space(&b2)));
}

#[test]
fn euler_identity_fails_with_wrong_sign() {
    // Oracle: rank one by hand. Σ_y i_y p_y (a, b) = (a + 2b, 2a + b) for ρ = 2.
    let rep = scalar_rep("A1", 2);
    let s = rep.system().clone();
    let lhs = section_i(&rep, s.identity())
        .mul(&p_y(&rep, s.identity()))
        .add(&section_i(&rep, s.gen(0)).mul(&p_y(&rep, s.gen(0))));
    assert_eq!(lhs.mul_vec(&qv(&[1, 0])), qv(&[1, 2]));
    assert_eq!(lhs.mul_vec(&qv(&[0, 1])), qv(&[2, 1]));
    assert_ne!(lhs, iota(&rep).sub(&Matrix::identity(&(), 2)));
}

#[test]
fn half_identity_examples() {
    let r1 = scalar_rep("A1", 2);
    assert!(half_identity_check(&r1, 0).unwrap());
    let triv = BraidRepresentation::<Q>::trivial(sys("A2"), &(), 1);
    assert!(half_identity_check(&triv, 0).unwrap());
    assert!(half_identity_check(&triv, 1).unwrap());
    let hecke = hecke_regular(sys("B2"), &(), &q(2)).unwrap();
    assert!(half_identity_check(&hecke, 0).unwrap());
    assert!(half_identity_check(&hecke, 1).unwrap());
    assert!(half_identity_check(&hecke, 2).is_err());
}

#[test]
fn goodness_examples() {
    for v in [1, 2, -1, 3] {
        assert!(is_good(&scalar_rep("A1", v)).good);
    }
    let hecke = hecke_regular(sys("A2"), &(), &q(2)).unwrap();
    let report = is_good(&hecke);
    assert!(report.good);
    assert_eq!(report.cokernel_dim, 0);
    assert_eq!(report.span_by_length.len(), 4);

    // Cubic Hecke representation at q = 2 built from blocks with
    // eigenvalues in {2, 1, -1}.
    let s = sys("A2");
    let parts = vec![
        a2_block(s.clone(), &(), &q(2), &q(-1)).unwrap(),
        a2_block(s.clone(), &(), &q(2), &q(1)).unwrap(),
        a2_block(s.clone(), &(), &q(1), &q(-1)).unwrap(),
        BraidRepresentation::scalar(s.clone(), &(), 1, &[q(2), q(2)]).unwrap(),
    ];
    let rep = BraidRepresentation::direct_sum(&parts).unwrap();
    assert!(rep.check_cubic(&q(2)));
    assert!(is_good(&rep).good);
}

#[test]
fn goodness_is_invariant_under_base_change() {
    let rep = a2_block(sys("A2"), &(), &q(2), &q(-1)).unwrap();
    let p = Matrix::from_i64_rows(&(), &[&[1, 3], &[1, 4]]);
    let conj = rep.conjugate(&p).unwrap();
    assert_eq!(is_good(&rep), is_good(&conj));
}

#[test]
fn chi_rank_one() {
    let rep = scalar_rep("A1", 2);
    let report = chi_pairing(&rep, &rep.transpose_rep().unwrap()).unwrap();
    assert!(report.ok());
    assert_eq!((report.gram.nrows(), report.gram.ncols()), (2, 2));
    // Oracle: both surjections are [[1,2],[2,1]], the form on the sources
    // is the same matrix, so the Gram matrix is its inverse.
    let expected = Matrix::from_rows(
        &(),
        2,
        vec![vec![qf(-1, 3), qf(2, 3)], vec![qf(2, 3), qf(-1, 3)]],
    )
    .unwrap();
    assert_eq!(report.gram, expected);
}

#[test]
fn chi_with_inverse_transpose_dual_breaks_adjunction() {
    let rep = scalar_rep("A1", 2);
    let report = chi_pairing(&rep, &rep.contragredient().unwrap()).unwrap();
    assert!(report.nonsingular);
    assert!(!report.right_adjunction);
}

#[test]
fn chi_trivial_and_hecke() {
    let triv = BraidRepresentation::<Q>::trivial(sys("A2"), &(), 1);
    let report = chi_pairing(&triv, &triv.transpose_rep().unwrap()).unwrap();
    assert!(report.ok());
    let hecke = hecke_regular(sys("A2"), &(), &q(2)).unwrap();
    let report = chi_pairing(&hecke, &hecke.transpose_rep().unwrap()).unwrap();
    assert!(report.ok());
}

#[test]
fn chi_zero_dimensional() {
    let s = sys("A2");
    let rep = BraidRepresentation::<Q>::new(s, &(), 0, vec![Matrix::zeros(&(), 0, 0); 2]).unwrap();
    let report = chi_pairing(&rep, &rep.transpose_rep().unwrap()).unwrap();
    assert_eq!(report.gram.nrows(), 0);
    assert!(report.ok());
}

#[test]
fn gluecheck_graph_instance() {
    let a: Matrix<Q> = Matrix::from_i64_rows(&(), &[&[1, 2], &[0, 1]]);
    let b = Matrix::from_i64_rows(&(), &[&[3, 0], &[1, 1]]);
    let (k, i0, i1) = graph_instance(&a, &b).unwrap();
    let r = gluecheck(2, 2, &k, &i0, &i1).unwrap();
    assert!(r.k_equals_k_phi && r.v_phi_equals_k_h && r.consistent());
}

#[test]
fn gluecheck_detects_inequality() {
    let a: Matrix<Q> = Matrix::from_i64_rows(&(), &[&[0, 1], &[1, 0]]);
    let b = a.clone();
    let ctx = ();
    let k = Subspace::<Q>::full(&ctx, 4);
    let (_, i0, i1) = graph_instance(&a, &b).unwrap();
    let r = gluecheck(2, 2, &k, &i0, &i1).unwrap();
    assert_eq!(r.dim_v_phi, 0);
    assert_eq!(r.dim_k_h, 4);
    assert!(!r.k_equals_k_phi && !r.v_phi_equals_k_h && r.consistent());
}

#[test]
fn gluecheck_zero_piece_and_bad_section() {
    let k = Subspace::<Q>::full(&(), 2);
    let i0 = Matrix::identity(&(), 2);
    let i1 = Matrix::zeros(&(), 2, 0);
    let r = gluecheck(2, 0, &k, &i0, &i1).unwrap();
    assert_eq!(r.dim_v_phi, 2);
    assert!(r.consistent());

    let bad = Matrix::from_i64_rows(&(), &[&[2, 0], &[0, 1]]);
    assert!(matches!(
        gluecheck(2, 0, &k, &bad, &i1),
        Err(KwError::NotASection(_))
    ));
}
