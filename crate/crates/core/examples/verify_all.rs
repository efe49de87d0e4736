//! Every verification scenario, with a one-line summary per check.
//!
//!     cargo run --example verify_all

use macaulay::verify::{default_alphas, verify_all};

fn main() -> macaulay::Result<()> {
    let reports = verify_all(&default_alphas())?;
    for r in &reports {
        let param = r.parameter.as_deref().unwrap_or("");
        println!(
            "{} {param} {}",
            r.scenario,
            if r.passed { "pass" } else { "FAIL" }
        );
        for c in r.failed_checks() {
            println!(
                "  failed {}: {} computed {} expected {}",
                c.id, c.description, c.computed, c.expected
            );
        }
    }
    Ok(())
}
