//! Exact arithmetic over multivariate rational functions with rational
//! coefficients.

mod gcd;
mod parse;
mod poly;
mod ratfunc;

pub use gcd::{content, gcd};
pub use parse::{parse_expression, parse_rational};
pub use poly::{rat, Monomial, Polynomial, Rational, VarSet};
pub use ratfunc::{Point, RationalFunction};
