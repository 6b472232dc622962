//! Exact tools for deciding whether two- and three-variable polynomials over
//! the rationals are expanders.

pub mod decompose;
pub mod harness;
pub mod parser;
pub mod poly;
pub mod probe;
pub mod rational;

pub use parser::{format_polynomial, parse_polynomial, parse_with, ParseError, PolynomialSource};
pub use poly::{multivariate_gcd, Monomial, PolyError, Polynomial, UniPoly};
pub use rational::Rational;
