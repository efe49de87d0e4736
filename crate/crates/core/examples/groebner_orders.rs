//! The same ideal under different monomial orders, including an
//! elimination order.
//!
//!     cargo run --example groebner_orders

use macaulay::parser::parse_ideal;
use macaulay::{Ideal, MonomialOrder, RingContext};

fn main() -> macaulay::Result<()> {
    let ctx = RingContext::new(["t", "x", "y"])?;
    // the twisted cubic, parametrized by t
    let ideal = Ideal::new(&ctx, parse_ideal("x - t^2, y - t^3", &ctx)?)?;
    for order in [
        MonomialOrder::Grevlex,
        MonomialOrder::GradedLex,
        MonomialOrder::Lex,
        MonomialOrder::elimination(1),
    ] {
        let gb = ideal.groebner_for(&order);
        println!("{order:?}:");
        for g in gb.elements() {
            println!("  {g}");
        }
    }
    Ok(())
}
