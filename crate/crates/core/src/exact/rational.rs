//! Arbitrary-precision rationals.
//!
//! The ground field ℚ is `num_rational::BigRational`, which already keeps the
//! canonical invariants we need (reduced fraction, positive denominator).
//! This module only adds the handful of constructors the rest of the crate
//! leans on.

use alloc::string::String;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number: reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

/// The rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Whether the rational is an integer.
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Renders as `"p/q"`, or just `"p"` for integers.
pub fn to_fraction_string(x: &Rational) -> String {
    x.to_string()
}

/// Sign of a rational: -1, 0, or 1.
pub fn sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_rendered() {
        let x = rat(2, 4);
        assert_eq!(x, rat(1, 2));
        assert_eq!(to_fraction_string(&x), "1/2");
        assert_eq!(to_fraction_string(&rat_int(3)), "3");
        assert_eq!(to_fraction_string(&rat(-4, 3)), "-4/3");
    }

    #[test]
    fn parse_round_trip() {
        let x: Rational = "-7/3".parse().unwrap();
        assert_eq!(x, rat(-7, 3));
        let y: Rational = "5".parse().unwrap();
        assert_eq!(y, rat_int(5));
    }
}
