//! Exact rationals, multivariate polynomials and rational functions.

mod field;
mod gcd;
mod monomial;
mod parse;
mod poly;
mod sample;
mod symbols;

pub type Rational = num_rational::BigRational;

pub use field::{qnumber, qnumber_at, xi, Scalar};
pub use gcd::{content_in, gcd};
pub use monomial::Monomial;
pub use parse::parse;
pub use poly::Poly;
pub use sample::{probably_equal, random_point, IdentityVerdict};
pub use symbols::{Symbol, SymbolTable};

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
