//! Exact rational scalars, sparse multivariate polynomials and exact linear
//! algebra. Everything on the classification path is computed here without
//! floating point.

mod linear;
mod poly;
mod rational;
mod scalar;

pub use linear::LinearSystem;
pub use poly::{poly, Monomial, Poly};
pub use rational::{q, Rational};
pub use scalar::{det2, Scalar};
