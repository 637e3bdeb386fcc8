//! Finite Coxeter groups: ShortLex elements, reduced words, half-sets and
//! their convexity, coset projections and rank-two factorizations.
//!
//! Run with `cargo run --example coxeter_combinatorics -- B3`.

use coxglue::coxeter::{genset, CoxeterSystem, Side};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let sys = CoxeterSystem::from_label(&label)?;
    let w0 = sys.w0();
    println!("{label}: |W| = {}, w0 = {} of length {}", sys.order(), sys.format_element(w0), sys.length(w0));
    println!("reduced words of w0 (first 5): {:?}", sys.reduced_words(w0, Some(5)));

    for i in 0..sys.rank() {
        let half = sys.half_set(i, Side::Right);
        println!("P_{} has {} elements, convex: {}", i + 1, half.len(), sys.is_convex(&half));
    }

    // Closest point of the coset W_{s1} x to w0, and the complement n with w0 = n p.
    let j = genset(&[0]);
    let x = sys.gen(sys.rank() - 1);
    let cp = sys.coset_pointer(j, x, w0);
    println!(
        "coset W_{{s1}}{}: p = {}, n = {}",
        sys.format_element(x),
        sys.format_element(cp.p),
        sys.format_element(cp.n)
    );

    let mut shown = 0;
    for s in 0..sys.rank() {
        for w in sys.elements().filter(|&w| sys.sizig3_applies(s, w)) {
            let wit = sys.sizig3_witness(s, w)?;
            if shown < 4 {
                println!(
                    "s{} w = {}: w = w(s{}, s{}) w' with w(s, s2) = {}, w' = {}",
                    s + 1,
                    sys.format_element(w),
                    s + 1,
                    wit.s2 + 1,
                    sys.format_element(wit.w_s_s2),
                    sys.format_element(wit.w_prime)
                );
            }
            shown += 1;
        }
    }
    println!("{shown} pairs (s, w) factor through a rank-two parabolic");
    Ok(())
}
