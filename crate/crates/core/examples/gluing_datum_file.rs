//! Write a gluing datum by hand, save it in the JSON file format, read it
//! back and assemble it. The result is the algebra of upper triangular
//! 2x2 matrices: two copies of the field glued by one bimodule.
//!
//! `cargo run --example gluing_datum_file -- out.json` writes the file;
//! `coxglue glue k0 --file out.json` then checks it.

use coxglue::gluedalg::{Bimodule, GluingDatum, Site};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let datum = GluingDatum {
        prime: 101,
        sites: vec![Site::field(), Site::field()],
        bimodules: vec![Bimodule {
            i: 0,
            j: 1,
            dim: 1,
            left: vec![vec![vec![1]]],
            right: vec![vec![vec![1]]],
        }],
        compositions: vec![],
        coxeter: None,
    };
    let json = serde_json::to_string_pretty(&datum)?;
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(&path, &json)?,
        None => println!("{json}"),
    }
    let back: GluingDatum = serde_json::from_str(&json)?;
    let ga = back.assemble()?;
    println!("assembled Γ of dimension {} from {} sites", ga.dim(), ga.n());
    Ok(())
}
