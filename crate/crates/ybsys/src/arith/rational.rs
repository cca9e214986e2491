use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Field};

/// Arbitrary-precision rational. `num_rational::BigRational` already keeps
/// the invariants we need: positive denominator, gcd-reduced, zero as 0/1.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_int(&self, n: i64) -> Rational {
        rat(n)
    }

    fn from_bigint(&self, n: &BigInt) -> Rational {
        Rational::from_integer(n.clone())
    }

    fn from_rational(&self, r: &Rational) -> Result<Rational, ArithError> {
        Ok(r.clone())
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn inv(&self, a: &Rational) -> Result<Rational, ArithError> {
        if a.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn pow(&self, a: &Rational, n: u32) -> Rational {
        a.pow(n as i32)
    }

    fn format(&self, a: &Rational) -> String {
        // Ratio's Display is already grammar-conformant: "n" or "n/d".
        a.to_string()
    }
}

/// Sign of a rational, as -1, 0, or 1.
pub(crate) fn signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
