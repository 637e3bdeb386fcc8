//! Exact scalars: Laurent polynomials and their residues modulo a
//! cyclotomic polynomial, fraction-free determinants, subspaces, and integer
//! lattices in Hermite normal form.

use coxglue::exact::parse::parse_laurent;
use coxglue::exact::{qf, reduce_mod, IntegerLattice, LaurentPoly, Matrix, Poly, Ring, Subspace, Q};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = parse_laurent("u^-1 + 2 - u^3")?;
    let g = parse_laurent("1 + u")?;
    println!("f = {f}, g = {g}, f g = {}", f.mul(&g));

    // Φ₆ = u² − u + 1.
    let phi6 = Poly::from_i64s(&(), &[1, -1, 1]);
    let r = reduce_mod(&parse_laurent("1 - 2u + 2u^2 - u^3")?, &phi6)?;
    println!("1 - 2u + 2u^2 - u^3 mod {phi6} = {}", r.residue);

    let m: Matrix<LaurentPoly> = Matrix::from_fn(&(), 3, 3, |i, j| {
        LaurentPoly::monomial(Q::from_i64(&(), 1), (i as i64 - j as i64).abs())
    });
    println!("det [u^|i-j|] = {}", m.det_laurent()?);

    let v = Subspace::span(&(), 3, vec![vec![qf(1, 2), qf(1, 1), qf(0, 1)], vec![qf(1, 1), qf(2, 1), qf(0, 1)]]);
    println!("span has dimension {}, basis\n{}", v.dim(), v.basis());

    let l = IntegerLattice::from_i64(3, &[&[2, 4, 0], &[0, 6, 3], &[2, 10, 3]])?;
    println!("lattice of rank {} with Hermite basis\n{l}", l.rank());
    Ok(())
}
