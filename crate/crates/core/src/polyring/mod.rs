//! Polynomial arithmetic layer: rings of named variables, monomials and
//! monomial orders, sparse multivariate polynomials generic over the
//! coefficient type, exact rational intervals, polynomial matrices with
//! fraction-free determinants, and the text-format parser.

mod interval;
mod matrix;
mod monomial;
mod parser;
mod poly;
mod ring;

pub use interval::{eval_poly_interval, Interval};
pub use matrix::PolyMatrix;
pub use monomial::{Monomial, MonomialOrder};
pub use parser::parse_poly;
pub use poly::{Coeff, Polynomial};
pub use ring::Ring;
