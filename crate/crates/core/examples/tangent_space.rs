//! Tangent space dimension dim I/I^2 = dim S/I^2 - dim S/I.
//!
//!     cargo run --example tangent_space

use macaulay::verify::tangent_dimension;
use macaulay::{Ideal, RingContext};

fn main() -> macaulay::Result<()> {
    let ctx = RingContext::new(["a1", "a2", "a3", "a4", "a5"])?;
    let ideal = Ideal::parse(
        &ctx,
        "a1*a2, a1*a3, a1*a4, a2^2 - a1^2, a2*a3, a2*a4 - a3^2, a2*a5 - a4^2, a3*a5, a4*a5, a5^2",
    )?;
    let square = ideal.power(2)?;
    println!("I^2 has {} generators", square.generators().len());
    let small = ideal.quotient_dimension()?;
    let big = square.quotient_dimension()?;
    println!("dim S/I = {small}, dim S/I^2 = {big}");
    println!("dim I/I^2 = {}", tangent_dimension(&ideal)?);
    println!("length * number of variables = {}", small * ctx.len());
    Ok(())
}
