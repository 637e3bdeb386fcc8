//! The space `K_W(V)` of a braid representation: goodness, the Euler and
//! half-set identities of the canonical complexes, and the pairing `χ`.

use std::sync::Arc;

use coxglue::braidrep::{b2_block, hecke_regular, BraidRepresentation};
use coxglue::coxeter::CoxeterSystem;
use coxglue::exact::{q, Field};
use coxglue::kwglue::{chi_pairing, euler_identity_check, half_identity_check, is_good, kw_space};

fn summarize<F: Field>(name: &str, rep: &BraidRepresentation<F>) -> Result<(), Box<dyn std::error::Error>> {
    let kw = kw_space(rep);
    let g = is_good(rep);
    println!("{name}: dim V = {}, dim K_W = {}, good = {}", g.dim_v, g.dim_kw, g.good);
    println!("  span of i_y(V) by length: {:?}", g.span_by_length);
    println!("  euler identity: {}", euler_identity_check(rep, &kw));
    for i in 0..rep.system().rank() {
        println!("  half identity for P_{}: {}", i + 1, half_identity_check(rep, i)?);
    }
    let chi = chi_pairing(rep, &rep.transpose_rep()?)?;
    println!(
        "  chi: {}x{} gram, nonsingular {}, adjunctions {} {}",
        chi.gram.nrows(),
        chi.gram.ncols(),
        chi.nonsingular,
        chi.left_adjunction,
        chi.right_adjunction
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a1 = Arc::new(CoxeterSystem::from_label("A1")?);
    summarize("A1, s -> 2", &BraidRepresentation::scalar(a1, &(), 1, &[q(2)])?)?;
    let a2 = Arc::new(CoxeterSystem::from_label("A2")?);
    summarize("Hecke A2 at q = 2", &hecke_regular(a2, &(), &q(2))?)?;
    let b2 = Arc::new(CoxeterSystem::from_label("B2")?);
    summarize("B2 block (2, -1, 2, 1)", &b2_block(b2, &(), &q(2), &q(-1), &q(2), &q(1))?)?;
    Ok(())
}
