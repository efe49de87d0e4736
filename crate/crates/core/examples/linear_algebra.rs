//! Exact rank, reduced row echelon form and kernel over Q.
//!
//!     cargo run --example linear_algebra

use macaulay::linalg::{kernel_basis, rank, rref, RationalMatrix};

fn main() {
    let m = RationalMatrix::from_i64(&[&[2, 4, -2, 6], &[1, 2, 1, 0], &[3, 6, -1, 6]]);
    println!("rank {}", rank(&m));
    let r = rref(&m);
    for i in 0..r.rows() {
        println!(
            "  {:?}",
            r.row(i).iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }
    for v in kernel_basis(&m) {
        println!(
            "kernel vector {:?}",
            v.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }
}
