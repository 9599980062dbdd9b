//! Exact scalars: big rationals, sparse multivariate polynomials, rational
//! functions and small prime fields, all behind the [`Scalar`] trait.

mod fp;
mod poly;
mod ratfunc;
mod rational;
mod scalar;

pub use fp::{is_odd_prime, Fp, SUPPORTED_PRIMES};
pub use poly::{Monomial, Polynomial, Symbol, LAMBDA};
pub use ratfunc::{DivisionByZero, RationalFunction};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use scalar::{pow, Field, Scalar};
