//! Exact computational real algebraic geometry over the rationals.
//!
//! The crate builds up from sparse multivariate polynomial arithmetic
//! ([`polyring`]) through Gröbner-basis machinery ([`groebner`]) and
//! zero-dimensional system analysis ([`zerodim`]) to the geometric
//! constructions this library exists for: generalized polar varieties,
//! critical loci and singular loci ([`geometry`]), candidate roadmaps of
//! real algebraic sets ([`roadmap`]), and a numerical harness that checks
//! the connectivity property those roadmaps are supposed to have
//! ([`connectivity`]).
//!
//! All core computations are exact: coefficients are arbitrary-precision
//! rationals and every count (solutions, real solutions, dimensions) is
//! certified by exact linear algebra. Floating point appears only in the
//! connectivity harness, which is an explicitly numerical verdict layer.
//!
//! The polynomial arithmetic layer is generic over the coefficient type
//! (anything satisfying [`polyring::Coeff`]); everything from Gröbner bases
//! upward is pinned to the rationals, re-exported here as [`Rat`] with
//! concrete aliases [`Poly`] and [`PolyMat`].

pub mod connectivity;
mod error;
pub mod geometry;
pub mod groebner;
pub mod polyring;
pub mod roadmap;
pub mod zerodim;

pub use error::{Error, Result};
pub use polyring::{Interval, Monomial, MonomialOrder, PolyMatrix, Polynomial, Ring};

/// Arbitrary-precision rational scalar used by all exact layers.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Sparse multivariate polynomial over the rationals.
pub type Poly = Polynomial<Rat>;
/// Matrix of rational polynomials.
pub type PolyMat = PolyMatrix<Rat>;

/// Convenience constructor for a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Convenience constructor for an integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}
