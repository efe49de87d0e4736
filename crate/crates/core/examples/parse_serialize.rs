//! The text format: parsing, canonical serialization and error positions.
//!
//!     cargo run --example parse_serialize

use macaulay::parser::{expand_variables, parse_ideal, parse_polynomial, serialize};
use macaulay::RingContext;

fn main() -> macaulay::Result<()> {
    let ctx = RingContext::new(expand_variables("x1..x3").unwrap())?;
    let p = parse_polynomial("(x1 - 1/2*x2)^2 + 3*x3**2 - x1^2", &ctx)?;
    let text = serialize(&p);
    println!("canonical: {text}");
    assert_eq!(parse_polynomial(&text, &ctx)?, p);

    let list = parse_ideal("[x1*x2,\n x2^2 - x3]", &ctx)?;
    println!(
        "{} generators: {}",
        list.len(),
        list.iter().map(serialize).collect::<Vec<_>>().join("; ")
    );

    for bad in ["x1 + * x2", "x1^0", "x4", "1/0"] {
        println!("{bad:>10} -> {}", parse_polynomial(bad, &ctx).unwrap_err());
    }
    Ok(())
}
