//! Exact multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] lives in a [`RingContext`] that fixes the variable names
//! and their order. Terms are stored sparsely, sorted by descending grevlex,
//! with no zero coefficients, so structural equality is ideal equality of
//! elements.

mod context;
mod monomial;
mod order;
mod polynomial;

pub use context::RingContext;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::Polynomial;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num / den`.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
