//! Gröbner computations compared with plain Macaulay-matrix linear algebra.
//!
//!     cargo run --example oracle_crosscheck

use macaulay::oracle::{oracle_membership, oracle_quotient_dimension};
use macaulay::parser::{parse_ideal, parse_polynomial};
use macaulay::{Ideal, RingContext};

fn main() -> macaulay::Result<()> {
    let ctx = RingContext::new(["a", "b", "c"])?;
    let src = "a^2 - b*c, b^2 - a*c, c^2 - a*b, a*b*c";
    let gens = parse_ideal(src, &ctx)?;
    let ideal = Ideal::new(&ctx, gens.clone())?;
    println!("Gröbner: dim = {}", ideal.quotient_dimension()?);
    println!(
        "oracle:  dim = {:?}",
        oracle_quotient_dimension(&ctx, &gens, 6)?
    );
    for p in ["a^3", "a*b", "a^2*b - b^2*c"] {
        let p = parse_polynomial(p, &ctx)?;
        println!(
            "{p}: member {} / oracle {}",
            ideal.contains(&p)?,
            oracle_membership(&p, &gens, 6)?
        );
    }
    Ok(())
}
