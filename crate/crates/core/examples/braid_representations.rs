//! Braid group representations: Hecke algebra models, explicit 2-dim
//! blocks, validation, the transport `s ↦ −s⁻¹` to the cubic relation and
//! induction from a parabolic subgroup.

use std::sync::Arc;

use coxglue::braidrep::{
    a2_block, cubic_to_quadratic_transport, hecke_regular, induce, parabolic_system, validate, BraidRepresentation,
};
use coxglue::coxeter::{genset, CoxeterSystem};
use coxglue::exact::{q, Matrix, Q};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a2 = Arc::new(CoxeterSystem::from_label("A2")?);

    let hecke = hecke_regular(a2.clone(), &(), &q(2))?;
    println!("Hecke regular rep of A2 at q = 2: dim {}", hecke.dim());
    println!("  (s - 2)(s + 1) = 0: {}", hecke.check_quadratic(&q(2)));
    let t = cubic_to_quadratic_transport(&hecke, &q(2))?;
    println!("  after s -> -s^-1, (s + {})(s^2 - 1) = 0: {}", t.u, t.cubic_holds);

    let block = a2_block(a2.clone(), &(), &q(2), &q(-1))?;
    println!("a2 block s1 =\n{}", block.gen(0));

    // Two unipotent matrices that do not satisfy the braid relation.
    let bad: [Matrix<Q>; 2] = [
        Matrix::from_i64_rows(&(), &[&[1, 1], &[0, 1]]),
        Matrix::from_i64_rows(&(), &[&[1, 0], &[1, 1]]),
    ];
    let report = validate(&a2, 2, &bad);
    println!("unipotent pair is a representation: {}", report.ok());

    let j = genset(&[0]);
    let sub = Arc::new(parabolic_system(&a2, j)?);
    let rep0 = BraidRepresentation::scalar(sub, &(), 1, &[q(2)])?;
    let ind = induce(&rep0, a2.clone(), j)?;
    let reps: Vec<String> = ind.coset_reps.iter().map(|&w| a2.format_element(w)).collect();
    println!("induced from s1 -> 2: dim {}, blocks indexed by {:?}", ind.rep.dim(), reps);
    println!("induced s2 =\n{}", ind.rep.gen(1));
    Ok(())
}
