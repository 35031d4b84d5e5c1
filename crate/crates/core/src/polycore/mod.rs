//! Exact arithmetic over ℚ: monomials, term orders, rings and polynomials.

pub(crate) mod lexer;
mod monomial;
mod order;
mod poly;
mod ring;

pub use monomial::Monomial;
pub use order::{compare_monomials, TermOrder};
pub use poly::{poly_arith, PolyOp, Polynomial};
pub(crate) use poly::{parse_expr, Cursor};
pub use ring::{Ring, RingDescriptor};

/// Arbitrary-precision rational; always normalized with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
