//! Arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already keeps `gcd(|n|, d) = 1` with `d > 0`
//! and canonical zero `0/1`, so we use it directly and only add the text
//! format used across the JSON interfaces.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::scalar::{Field, Scalar};
use crate::error::ParseError;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `"n"`, `"-n"` or `"n/d"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let t = s.trim();
    let bad = || ParseError::new(format!("invalid rational `{s}`"), 1, 1);
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ParseError::new(format!("zero denominator in `{s}`"), 1, 1));
    }
    Ok(Rational::new(n, d))
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub(crate) fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let q = rat(6, -4);
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&rat(0, 5)), "0");
        assert_eq!(*rat(0, -7).denom(), BigInt::from(1));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-3/2", "17", "1/1000000000000000000000"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
