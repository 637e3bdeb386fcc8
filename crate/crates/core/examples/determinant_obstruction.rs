//! The matrix M_{w,w'} = (−u)^{ℓ(w' w⁻¹)} of A2, its determinant, the two
//! character factors, and why M E = p_G · I has no Laurent solution for
//! p_G = (1 − u²)(1 − u³).

use coxglue::counterexample::{build_m, divisibility_analysis, laurent_solution, rational_solution, DEFAULT_ORDER_CAP};
use coxglue::coxeter::CoxeterSystem;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "A2".into());
    let sys = CoxeterSystem::from_label(&label)?;
    println!("M for {label}:\n{}", build_m(&sys));
    let a = divisibility_analysis(&sys, None, DEFAULT_ORDER_CAP)?;
    println!("det M = {}", a.det_m);
    println!("Σ u^ℓ = {} divides: {}", a.poincare, a.divisible_by_poincare);
    println!("Σ (-u)^ℓ = {} divides: {}", a.signed_poincare, a.divisible_by_signed);
    println!("det M mod u^2 - u + 1 = {}", a.det_mod_phi6);
    if let Some(p) = &a.p_g {
        println!("p_G = {p}, mod u^2 - u + 1 = {}", a.p_g_mod_phi6.as_ref().expect("with p_G"));
        println!("verdict: {:?}", a.verdict);
        println!("rational solution exists: {}", rational_solution(&sys, p).is_some());
        println!("Laurent solution exists: {}", laurent_solution(&sys, p).is_some());
    }
    Ok(())
}
