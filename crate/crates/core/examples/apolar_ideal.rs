//! Apolar ideal of a cubic in five variables, checked against a known
//! generating set.
//!
//!     cargo run --example apolar_ideal

use macaulay::apolarity::DualPairing;
use macaulay::parser::parse_polynomial;
use macaulay::{Ideal, RingContext};

fn main() -> macaulay::Result<()> {
    let primal = RingContext::new(["x1", "x2", "x3", "x4", "x5"])?;
    let pairing = DualPairing::new(&primal)?;
    let f = parse_polynomial("x2^2*x5 + x2*x4^2 + x1^2*x5 + x3^2*x4", &primal)?;

    let ann = pairing.apolar_ideal(&f)?;
    println!(
        "Ann(F) in {} has {} generators:",
        pairing.dual(),
        ann.generators().len()
    );
    for g in ann.generators() {
        println!("  {g}");
    }

    let listed = Ideal::parse(
        pairing.dual(),
        "a1*a2, a1*a3, a1*a4, a2^2 - a1^2, a2*a3, a2*a4 - a3^2, a2*a5 - a4^2, a3*a5, a4*a5, a5^2",
    )?;
    println!("equals the listed ideal: {}", ann.equals(&listed)?);

    // an inhomogeneous polynomial works too; its annihilator is not graded
    let g = parse_polynomial("x1^2 + x2", &primal)?;
    let ann_g = pairing.apolar_ideal(&g)?;
    println!(
        "Ann(x1^2 + x2) = {ann_g}, length {}",
        ann_g.quotient_dimension()?
    );
    Ok(())
}
