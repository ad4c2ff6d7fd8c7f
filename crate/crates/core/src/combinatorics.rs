//! Factorials, binomials and signs as exact big integers.

use num_bigint::BigInt;
use num_traits::One;

use crate::series::Rational;

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

pub fn binomial_q(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// `(-1)^e` as a rational.
pub fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `base^exp` as a big integer.
pub fn pow_int(base: u64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::from(0));
        assert_eq!(binomial(43, 0), BigInt::from(1));
        assert_eq!(pow_int(3, 4), BigInt::from(81));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}
