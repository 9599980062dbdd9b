use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::scalar::{Field, Scalar};
use super::Rational;

/// Element of the prime field `F_P` for an odd prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

/// Primes the exhaustive tooling is wired for.
pub const SUPPORTED_PRIMES: [u32; 3] = [3, 5, 7];

pub fn is_odd_prime(p: u32) -> bool {
    p > 2 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl<const P: u32> Fp<P> {
    const VALID: () = assert!(P > 2 && P % 2 == 1, "modulus must be an odd prime");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub const fn modulus() -> u32 {
        P
    }

    /// All field elements in increasing order of representative.
    pub fn elements() -> impl Iterator<Item = Self> {
        (0..P).map(Fp)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut acc = 1u64;
        let mut b = self.0 as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % P as u64;
            }
            b = b * b % P as u64;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(mod {})", self.0, P)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

fn reduce<const P: u32>(n: &BigInt) -> Fp<P> {
    let r = n.mod_floor(&BigInt::from(P));
    Fp(r.to_u32().expect("residue fits in u32"))
}

impl<const P: u32> Scalar for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_rational(q: &Rational) -> Option<Self> {
        let n = reduce::<P>(q.numer());
        let d = reduce::<P>(q.denom());
        d.inv().map(|di| n * di)
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P as u64 - 2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn fermat_and_inverses() {
        fn check<const P: u32>() {
            for x in Fp::<P>::elements().filter(|x| !x.is_zero()) {
                assert_eq!(x.pow(P as u64 - 1), Fp::one());
                assert_eq!(x * x.inv().unwrap(), Fp::one());
            }
            assert!(Fp::<P>::zero().inv().is_none());
        }
        check::<3>();
        check::<5>();
        check::<7>();
    }

    #[test]
    fn rational_images() {
        assert_eq!(Fp::<3>::from_rational(&rat(1, 2)), Some(Fp::new(2)));
        assert_eq!(Fp::<3>::from_rational(&rat(1, 3)), None);
        assert_eq!(Fp::<5>::from_rational(&rat(-1, 2)), Some(Fp::new(2)));
    }

    #[test]
    fn modular_coefficient() {
        // 2*beta at beta = 2 over F_3
        assert_eq!(Fp::<3>::new(2) * Fp::new(2), Fp::new(1));
    }

    #[test]
    fn primality() {
        assert!(is_odd_prime(3) && is_odd_prime(7) && is_odd_prime(101));
        assert!(!is_odd_prime(2) && !is_odd_prime(9) && !is_odd_prime(1));
    }
}
