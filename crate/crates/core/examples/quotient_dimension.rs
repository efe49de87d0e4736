//! Reduced Gröbner basis, standard monomials and quotient dimension.
//!
//!     cargo run --example quotient_dimension

use macaulay::groebner::buchberger;
use macaulay::parser::parse_ideal;
use macaulay::{MonomialOrder, RingContext};

fn main() -> macaulay::Result<()> {
    let ctx = RingContext::new(["a1", "a2", "a3", "a4", "a5"])?;
    let gens = parse_ideal(
        "a1*a2, a1*a3, a1*a4, a2^2 - a1^2, a2*a3, a2*a4 - a3^2, a2*a5 - a4^2, a3*a5, a4*a5, a5^2",
        &ctx,
    )?;
    let gb = buchberger(&ctx, &gens, &MonomialOrder::Grevlex)?;
    println!("reduced grevlex basis ({} elements):", gb.len());
    for g in gb.elements() {
        println!("  {g}");
    }
    let names = ctx.names();
    let standard: Vec<String> = gb
        .standard_monomials()?
        .iter()
        .map(|m| m.display(names).to_string())
        .collect();
    println!("standard monomials: {}", standard.join(", "));
    println!("dim S/I = {}", gb.quotient_dimension()?);
    Ok(())
}
