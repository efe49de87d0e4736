//! Colon ideals, saturation and homogenization.
//!
//!     cargo run --example saturation

use macaulay::parser::parse_polynomial;
use macaulay::{Ideal, RingContext};

fn main() -> macaulay::Result<()> {
    let ctx = RingContext::new(["x", "y"])?;
    let i = Ideal::parse(&ctx, "x^2*y, x*y^2")?;
    let x = parse_polynomial("x", &ctx)?;
    println!("I = {i}");
    println!("I : x    = {}", i.colon(&x)?.canonical());
    println!("I : x^oo = {}", i.saturate(&x)?.canonical());

    let a = Ideal::parse(&ctx, "x^2 - 1, y - x")?;
    let h = a.homogenize("z")?;
    println!("homogenization of {a}: {h}");
    println!("saturated: {}", h.irrelevant_saturation()?.equals(&h)?);

    // an ideal with an embedded component at the origin is not saturated
    let g = RingContext::new(["u", "v"])?;
    let j = Ideal::parse(&g, "u^2, u*v")?;
    println!(
        "{j} saturated: {} (saturation {})",
        j.irrelevant_saturation()?.equals(&j)?,
        j.irrelevant_saturation()?.canonical()
    );
    Ok(())
}
