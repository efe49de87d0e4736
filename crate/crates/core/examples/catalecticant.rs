//! Catalecticant matrices of a form and the Hilbert function they give.
//!
//!     cargo run --example catalecticant -- "x1^3 + x2^3 + x1*x2*x3"

use macaulay::apolarity::DualPairing;
use macaulay::parser::{expand_variables, parse_polynomial};
use macaulay::RingContext;

fn main() -> macaulay::Result<()> {
    let src = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "x2^2*x5 + x2*x4^2 + x1^2*x5 + x3^2*x4".into());
    let primal = RingContext::new(expand_variables("x1..x5").unwrap())?;
    let pairing = DualPairing::new(&primal)?;
    let f = parse_polynomial(&src, &primal)?;
    let d = f.degree().unwrap_or(0) as usize;

    println!("F = {f}");
    for e in 0..=d {
        let cat = pairing.catalecticant(&f, e)?;
        println!(
            "  e = {e}: {} x {} matrix, rank {}",
            cat.matrix.rows(),
            cat.matrix.cols(),
            cat.rank()
        );
    }
    let h = pairing.apolar_hilbert(&f)?;
    println!("Hilbert function {h}, symmetric: {}", h.is_symmetric());
    Ok(())
}
