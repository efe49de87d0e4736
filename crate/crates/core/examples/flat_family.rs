//! Flat degeneration of two comaximal components, checked at several values
//! of the family parameter.
//!
//!     cargo run --example flat_family -- 1 -3 1/2

use macaulay::verify::{default_alphas, verify_flat_family};
use macaulay::Rational;

fn main() -> macaulay::Result<()> {
    let args: Vec<Rational> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("rational alpha"))
        .collect();
    let alphas = if args.is_empty() {
        default_alphas()
    } else {
        args
    };
    for alpha in &alphas {
        let report = verify_flat_family(alpha)?;
        println!(
            "alpha = {alpha}: {}",
            if report.passed { "pass" } else { "FAIL" }
        );
        for c in &report.checks {
            println!("  {:3} {}: {}", c.id, c.description, c.computed);
        }
    }
    Ok(())
}
