//! Exact commutative algebra over the rationals, aimed at Artinian
//! Gorenstein algebras given by Macaulay inverse systems.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`]: rationals, monomials, term orders and sparse polynomials
//! - [`parser`]: a small text syntax for polynomials and generator lists
//! - [`linalg`]: exact dense linear algebra (rank, kernels, rref)
//! - [`groebner`]: Buchberger's algorithm, normal forms, quotient dimension
//!   and Hilbert functions
//! - [`ideals`]: sums, products, intersections, colons, saturation,
//!   homogenization
//! - [`apolarity`]: contraction, catalecticants and apolar ideals
//! - [`oracle`]: Groebner-free Macaulay-matrix cross-checks
//! - [`verify`]: scenario reports for the (1,5,5,1) computation
//! - [`cli`]: the `macaulay` command-line front end
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod apolarity;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod ideals;
pub mod linalg;
pub mod oracle;
pub mod parser;
pub mod poly;
pub mod verify;

pub use error::{Error, ParseError, Result};
pub use groebner::{GroebnerBasis, HilbertFunction};
pub use ideals::Ideal;
pub use poly::{Monomial, MonomialOrder, Polynomial, Rational, RingContext};
