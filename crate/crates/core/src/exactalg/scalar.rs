use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;

/// A commutative ring with exact equality.
///
/// Every structure-constant computation in the crate is generic over this
/// trait, so the same residual code runs over `Q`, over `F_p`, and over
/// rational functions in the family parameters.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    /// Image of a rational number; `None` when the denominator is not
    /// invertible in this ring (e.g. `1/3` in `F_3`).
    fn from_rational(q: &Rational) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
            .expect("integers embed in every scalar ring")
    }
}

/// A scalar ring in which every nonzero element is invertible.
pub trait Field: Scalar {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

/// Raise to a non-negative power by repeated squaring.
pub fn pow<S: Scalar>(base: &S, mut exp: u32) -> S {
    let mut acc = S::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        exp >>= 1;
        if exp > 0 {
            b = b.clone() * b;
        }
    }
    acc
}
