//! Hilbert functions of graded Artinian quotients.
//!
//!     cargo run --example hilbert_function

use macaulay::{Ideal, RingContext};

fn main() -> macaulay::Result<()> {
    let ctx = RingContext::new(["a1", "a2", "a3", "a4", "a5"])?;
    let cases = [
        "a1*a2, a1*a3, a1*a4, a2^2 - a1^2, a2*a3, a2*a4 - a3^2, a2*a5 - a4^2, a3*a5, a4*a5, a5^2",
        "a1^2, a2^2, a3^2, a4^2, a5^2",
        "a1, a2, a3, a4^3, a5^2",
    ];
    for src in cases {
        let ideal = Ideal::parse(&ctx, src)?;
        let h = ideal.hilbert_function()?;
        println!(
            "{h}  total {}  socle degree {}  ({src})",
            h.total(),
            h.socle_degree()?
        );
    }
    Ok(())
}
