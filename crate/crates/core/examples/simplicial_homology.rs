//! Coefficient systems on the simplex with vertex set `{1..n}`: the chain
//! complex of one acyclic instance, one instance with the hypothesis broken,
//! and a seeded fuzz run.

use coxglue::exact::Q;
use coxglue::simplicial::{build_homlem_instance, chain_complex, homlem_fuzz, HomlemInstance};

fn show(name: &str, inst: &HomlemInstance) -> Result<(), Box<dyn std::error::Error>> {
    let sys = build_homlem_instance::<Q>(&(), inst);
    let cx = chain_complex(&sys, false)?;
    cx.check()?;
    println!(
        "{name}: hypothesis {}, homology dims {:?}, B(∅) has dim {}",
        inst.hypothesis_holds(),
        cx.homology(),
        inst.dim_of(0)
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // One index t with I¹(t) = {1} and I²(t) = ∅.
    let good = HomlemInstance { n: 2, t1: vec![1, 0], t2: vec![1, 1], dims: vec![1] };
    show("I1(t) = {1}, I2(t) = {}", &good)?;
    // I¹(t) = I²(t) = {1}.
    let broken = HomlemInstance { n: 2, t1: vec![1, 0], t2: vec![0, 1], dims: vec![1] };
    show("I1(t) = I2(t) = {1}", &broken)?;

    let report = homlem_fuzz::<Q>(&(), 7, 200, 5);
    println!(
        "fuzz seed {}: {}/{} confirmed, {}/{} broken instances detected",
        report.seed, report.confirmed, report.instances, report.negative_detected, report.negative_controls
    );
    Ok(())
}
