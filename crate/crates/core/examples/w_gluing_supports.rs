//! A gluing indexed by the elements of A2 in which crossing the wall of s1
//! composes to zero. Simple modules then live on one side of the wall, and
//! each support is an intersection of translated half-sets.

use coxglue::gluedalg::{builtin, support_scan, DEFAULT_CAP, DEFAULT_PRIME};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let datum = builtin("bounce-A2", DEFAULT_PRIME)?;
    let report = support_scan(&datum, 0, DEFAULT_CAP)?;
    let sys = &report.system;
    println!(
        "{} sites, {} composition triples checked, {} intersections of translates P_i x",
        sys.order(),
        report.w_gluing_checked,
        report.intersections
    );
    for s in &report.simples {
        let support: Vec<String> = s.support.iter().map(|&w| sys.format_element(w)).collect();
        println!(
            "simple of dim {}: support {:?}, whole {}, intersection {}, convex {}",
            s.dim, support, s.whole, s.translate_intersection, s.convex
        );
    }
    Ok(())
}
