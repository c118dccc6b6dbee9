//! Arbitrary-precision helpers shared by the closed forms, branch weights
//! and series builders. Everything here is exact; no floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// n^k as a BigInt, with 0^0 = 1.
pub fn int_pow(n: u64, k: u32) -> BigInt {
    BigInt::from(n).pow(k)
}

/// Exact n^e for a possibly negative exponent, as a rational.
pub fn rational_pow(n: &BigInt, e: i64) -> BigRational {
    assert!(!n.is_zero() || e >= 0, "0 raised to a negative power");
    let p = BigInt::from(n.clone()).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// Extracts the integer value of a rational known to be integral.
/// Panics otherwise: callers use this to assert integrality of counts.
pub fn expect_integer(q: &BigRational, context: &str) -> BigInt {
    assert!(
        q.is_integer(),
        "expected an integer value for {context}, got {q}"
    );
    q.to_integer()
}

/// Renders a rational canonically as "num/den" (denominator always present,
/// always positive).
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn is_nonnegative(q: &BigRational) -> bool {
    !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(1), big(1));
        assert_eq!(factorial(5), big(120));
        assert_eq!(factorial(10), big(3_628_800));
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(3, 2), big(3));
        assert_eq!(binomial(5, 3), big(10));
        assert_eq!(binomial(0, 0), big(1));
        // upper < lower vanishes
        assert_eq!(binomial(2, 3), big(0));
    }

    #[test]
    fn rational_pow_negative_exponent() {
        assert_eq!(rational_pow(&big(4), -1), rat(1, 4));
        assert_eq!(rational_pow(&big(3), 2), rat_int(9));
        assert_eq!(rational_pow(&big(7), 0), rat_int(1));
    }

    #[test]
    fn rational_string_is_canonical() {
        assert_eq!(rational_string(&rat(2, 4)), "1/2");
        assert_eq!(rational_string(&rat(-2, 4)), "-1/2");
        assert_eq!(rational_string(&rat_int(7)), "7/1");
    }
}
