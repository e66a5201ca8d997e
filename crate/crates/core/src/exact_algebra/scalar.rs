use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Poly, Rational};

/// Coefficient ring shared by wedge spaces, cocommutators and parameter
/// tuples. `Rational` is the exact field, `Poly` carries symbolic constants,
/// and `f64` is used only for approximate witnesses.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;

    /// Exact quotient when one exists in the ring (always for a nonzero field
    /// element; for `Poly` only when the divisor is a single term).
    fn try_div(&self, rhs: &Self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.recip().map(|inv| self * &inv)
    }
}

impl Scalar for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(r.clone())
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.try_inverse().map(|inv| self * &inv)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0.0 {
            None
        } else {
            Some(self / rhs)
        }
    }
}

/// 2×2 determinant over any scalar ring.
pub fn det2<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> S {
    a.clone() * d.clone() - b.clone() * c.clone()
}
