//! Exact arithmetic: dense big-integer polynomials and rationals.

pub mod poly;
pub mod rational;

pub use poly::IntPolynomial;
pub use rational::Rational;
