//! A two-site gluing datum over F_101: the glued algebra Γ, its simple
//! modules, the functors j^*, j_!, j_*, j_!* at each site, and the check
//! that classes of simples fill the lattice K(Φ).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use coxglue::gluedalg::{
    adjunction_check, builtin, extend_shriek, extend_star, k0_verify, middle_extension, restrict, simple_modules,
    DEFAULT_CAP, DEFAULT_PRIME,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let datum = builtin("two-site", DEFAULT_PRIME)?;
    let ga = datum.assemble()?;
    println!("Γ has dimension {} over F_{}", ga.dim(), ga.prime());
    for i in 0..ga.n() {
        let row: Vec<usize> = (0..ga.n()).map(|j| ga.block_dim(i, j)).collect();
        println!("  block dims from site {i}: {row:?}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let simples = simple_modules(ga.algebra(), DEFAULT_CAP, &mut rng)?;
    for (s, m) in simples.simples.iter().zip(&simples.regular_multiplicities) {
        let restricted: Vec<usize> = (0..ga.n()).map(|k| restrict(&ga, s, k).dim()).collect();
        println!("simple of dim {} (multiplicity {m} in Γ), restrictions {restricted:?}", s.dim());
    }

    for k in 0..ga.n() {
        let site = simple_modules(ga.site(k), DEFAULT_CAP, &mut rng)?;
        for a in &site.simples {
            println!(
                "site {k}, simple of dim {}: j_! {}, j_* {}, j_!* {}",
                a.dim(),
                extend_shriek(&ga, k, a).dim(),
                extend_star(&ga, k, a).dim(),
                middle_extension(&ga, k, a).dim()
            );
            for b in &simples.simples {
                assert!(adjunction_check(&ga, k, a, b).ok());
            }
        }
    }

    let k0 = k0_verify(&datum, 0, DEFAULT_CAP)?;
    println!("classes of simples: {:?}", k0.classes);
    println!("they span K(Φ): {}, independent: {}", k0.equal, k0.injective);
    Ok(())
}
