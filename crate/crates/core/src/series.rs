//! Truncated formal power series with exact rational coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `x^0, ..., x^N`; everything above `x^N` is unknown. Each operation states
//! the order of its result. Binary operations demand equal orders, and the
//! `*_truncating` variants are the permissive alternative that cuts both
//! operands to the smaller order first.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `num/den`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series of the given order whose leading coefficients are `coeffs`;
    /// missing coefficients are zero and extra ones are dropped.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    /// Series of order `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `c * x^k` truncated at `order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `x` at the given order.
    pub fn x(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// Exponential generating function of an indexed family:
    /// `sum_g values[g] * x^(offset + stride*g) / (offset + stride*g)!`.
    ///
    /// Terms past `order` are ignored.
    pub fn from_egf(values: &[Rational], offset: usize, stride: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (g, v) in values.iter().enumerate() {
            let k = offset + stride * g;
            if k > order {
                break;
            }
            s.coeffs[k] = v / Rational::from_integer(factorial(k));
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> Result<&Rational> {
        self.coeffs
            .get(k)
            .ok_or(Error::IndexOutOfRange { index: k, order: self.order() })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops every coefficient above `order`. Raising the order is refused.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise order {} to {}", self.order(), order);
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    fn truncated_pair(&self, other: &Self) -> (Self, Self) {
        let n = self.order().min(other.order());
        (self.truncate(n), other.truncate(n))
    }

    /// Coefficientwise sum; same order.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    pub fn add_truncating(&self, other: &Self) -> Self {
        let (a, b) = self.truncated_pair(other);
        a.add(&b).expect("orders equalised")
    }

    pub fn mul_truncating(&self, other: &Self) -> Self {
        let (a, b) = self.truncated_pair(other);
        a.mul(&b).expect("orders equalised")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// Quotient `f / g`.
    ///
    /// When `g` has valuation `v > 0`, both operands are divided by `x^v`
    /// first, so `f` must vanish to order at least `v`. The result has order
    /// `N - v`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let n = self.order();
        let v = other.valuation().ok_or(Error::DivisionByZero)?;
        if let Some(vf) = self.valuation() {
            if vf < v {
                return Err(Error::ValuationTooHigh { dividend: vf, divisor: v });
            }
        }
        if v > n {
            return Err(Error::OrderExhausted { valuation: v, order: n });
        }
        let m = n - v;
        let num = &self.coeffs[v..];
        let den = &other.coeffs[v..];
        let lead_inv = den[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let mut acc = num[k].clone();
            for j in 1..=k {
                if !den[j].is_zero() {
                    acc -= &den[j] * &out[k - j];
                }
            }
            out.push(acc * &lead_inv);
        }
        Ok(Self { coeffs: out })
    }

    /// Termwise derivative, order `N - 1`.
    ///
    /// Panics on an order-0 series, whose derivative is entirely unknown.
    pub fn derive(&self) -> Self {
        assert!(self.order() >= 1, "derivative of an order-0 series is undefined");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        }
    }

    /// Antiderivative with the given constant term, order `N + 1`.
    pub fn integrate(&self, constant: Rational) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(constant);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / Rational::from_integer(BigInt::from(k + 1))),
        );
        Self { coeffs }
    }

    /// Coefficient of `x^k` in an exponential generating function.
    pub fn egf_coeff(&self, k: usize) -> Result<Rational> {
        self.coeff(k).cloned()
    }

    /// `k! * [x^k]`: the family value packaged at position `k`.
    pub fn egf_value(&self, k: usize) -> Result<Rational> {
        Ok(self.coeff(k)? * Rational::from_integer(factorial(k)))
    }

    /// `(k, coefficient)` for every nonzero coefficient.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

/// `sin(a x)` to order `order`.
pub fn sin_scaled(a: &Rational, order: usize) -> TruncatedSeries {
    trig_scaled(a, order, 1)
}

/// `cos(a x)` to order `order`.
pub fn cos_scaled(a: &Rational, order: usize) -> TruncatedSeries {
    trig_scaled(a, order, 0)
}

// Coefficient of x^k is (-1)^((k - parity)/2) a^k / k! for k = parity mod 2.
fn trig_scaled(a: &Rational, order: usize, parity: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut power = Rational::one();
    let mut fact = BigInt::one();
    for (k, slot) in coeffs.iter_mut().enumerate() {
        if k > 0 {
            power *= a;
            fact *= k;
        }
        if k % 2 == parity {
            let term = &power / Rational::from_integer(fact.clone());
            *slot = if ((k - parity) / 2).is_multiple_of(2) { term } else { -term };
        }
    }
    TruncatedSeries { coeffs }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.nonzero_terms() {
            let (sep, mag) = match (first, c.is_negative()) {
                (true, true) => ("-", -c),
                (true, false) => ("", c.clone()),
                (false, true) => (" - ", -c),
                (false, false) => (" + ", c.clone()),
            };
            first = false;
            match k {
                0 => write!(f, "{sep}{mag}")?,
                1 => write!(f, "{sep}{mag}*x")?,
                _ => write!(f, "{sep}{mag}*x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> Rational {
        q(1, 2)
    }

    /// Tangent series from `t' = 1 + t^2`, `t(0) = 0`, solved coefficient by
    /// coefficient without any series division.
    fn tan_oracle(order: usize) -> Vec<Rational> {
        let mut t = vec![Rational::zero(); order + 1];
        for n in 0..order {
            let mut rhs = if n == 0 { Rational::one() } else { Rational::zero() };
            for i in 0..=n {
                rhs += &t[i] * &t[n - i];
            }
            t[n + 1] = rhs / Rational::from_integer(BigInt::from(n + 1));
        }
        t
    }

    #[test]
    fn add_examples() {
        let a = TruncatedSeries::from_ints(&[1, 1], 3);
        let b = TruncatedSeries::from_ints(&[1, -1], 3);
        assert_eq!(a.add(&b).unwrap(), TruncatedSeries::from_ints(&[2], 3));

        let s = sin_scaled(&Rational::one(), 4).add(&cos_scaled(&Rational::one(), 4)).unwrap();
        let expected = TruncatedSeries::new(vec![q(1, 1), q(1, 1), q(-1, 2), q(-1, 6), q(1, 24)], 4);
        assert_eq!(s, expected);

        assert_eq!(a.add(&TruncatedSeries::zero(3)).unwrap(), a);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::one(4);
        assert_eq!(a.add(&b), Err(Error::OrderMismatch { left: 3, right: 4 }));
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch { left: 3, right: 4 }));
        assert_eq!(a.div(&b), Err(Error::OrderMismatch { left: 3, right: 4 }));
        assert_eq!(a.add_truncating(&b).order(), 3);
        assert_eq!(b.mul_truncating(&a), TruncatedSeries::one(3));
    }

    #[test]
    fn mul_examples() {
        let x = TruncatedSeries::x(5);
        assert_eq!(x.mul(&x).unwrap(), TruncatedSeries::monomial(Rational::one(), 2, 5));

        let one = Rational::one();
        let s = sin_scaled(&one, 30);
        let c = cos_scaled(&one, 30);
        let pyth = s.mul(&s).unwrap().add(&c.mul(&c).unwrap()).unwrap();
        assert_eq!(pyth, TruncatedSeries::one(30));
    }

    #[test]
    fn tan_half_times_cos_half_is_sin_half() {
        let n = 25;
        let tan_half = sin_scaled(&half(), n).div(&cos_scaled(&half(), n)).unwrap();
        let prod = tan_half.mul(&cos_scaled(&half(), n)).unwrap();
        assert_eq!(prod, sin_scaled(&half(), n));
    }

    #[test]
    fn div_examples() {
        let x = TruncatedSeries::x(6);
        let x2 = x.mul(&x).unwrap();
        assert_eq!(x2.div(&x).unwrap(), TruncatedSeries::x(5));

        let n = 21;
        let one = Rational::one();
        let tan = sin_scaled(&one, n).div(&cos_scaled(&one, n)).unwrap();
        assert_eq!(tan.coeffs(), tan_oracle(n).as_slice());
        assert_eq!(tan.coeff(3).unwrap(), &q(1, 3));
        assert_eq!(tan.coeff(5).unwrap(), &q(2, 15));

        // (2 sin(x/2))^2 / (2 sin x) = tan(x/2)
        let two = Rational::from_integer(2.into());
        let num = sin_scaled(&half(), n + 1).scale(&two).pow(2);
        let den = sin_scaled(&one, n + 1).scale(&two);
        let quot = num.div(&den).unwrap();
        assert_eq!(quot.order(), n);
        let tan_half: Vec<Rational> = tan_oracle(n)
            .iter()
            .enumerate()
            .map(|(k, c)| c / Rational::from_integer(BigInt::from(2).pow(k as u32)))
            .collect();
        assert_eq!(quot.coeffs(), tan_half.as_slice());
    }

    #[test]
    fn div_errors() {
        let x = TruncatedSeries::x(4);
        let one = TruncatedSeries::one(4);
        assert_eq!(one.div(&TruncatedSeries::zero(4)), Err(Error::DivisionByZero));
        assert_eq!(
            one.div(&x),
            Err(Error::ValuationTooHigh { dividend: 0, divisor: 1 })
        );
        // zero dividend is divisible by anything nonzero
        assert_eq!(TruncatedSeries::zero(4).div(&x).unwrap(), TruncatedSeries::zero(3));
    }

    #[test]
    fn derive_examples() {
        let x2 = TruncatedSeries::monomial(Rational::one(), 2, 4);
        assert_eq!(x2.derive(), TruncatedSeries::monomial(q(2, 1), 1, 3));
        assert!(TruncatedSeries::constant(q(7, 3), 5).derive().is_zero());

        // d/dx tan(x/2) = 1 / (2 cos^2(x/2))
        let n = 20;
        let tan_half = sin_scaled(&half(), n).div(&cos_scaled(&half(), n)).unwrap();
        let c = cos_scaled(&half(), n - 1);
        let rhs = TruncatedSeries::constant(half(), n - 1).div(&c.mul(&c).unwrap()).unwrap();
        assert_eq!(tan_half.derive(), rhs);
    }

    #[test]
    fn integrate_examples() {
        let i = TruncatedSeries::one(3).integrate(Rational::zero());
        assert_eq!(i, TruncatedSeries::x(4));

        let f = TruncatedSeries::new(vec![q(1, 3), q(-2, 5), q(0, 1), q(9, 7)], 3);
        assert_eq!(f.integrate(q(5, 1)).derive(), f);
    }

    #[test]
    fn integrate_degree_three_ode() {
        // (9/8)(3 sin x - sin 3x) / ((1 - cos 3x) cos^2(x/2)), both sides
        // divisible by x^2 before division; integrated from 0.
        let n = 14;
        let w = n + 2;
        let one = Rational::one();
        let three = q(3, 1);
        let num = sin_scaled(&one, w).scale(&three).sub(&sin_scaled(&three, w)).unwrap();
        let c = cos_scaled(&half(), w);
        let den = TruncatedSeries::one(w)
            .sub(&cos_scaled(&three, w))
            .unwrap()
            .mul(&c.mul(&c).unwrap())
            .unwrap();
        let deriv = num.div(&den).unwrap().scale(&q(9, 8));
        let l3 = deriv.integrate(Rational::zero());
        assert_eq!(l3.coeff(0).unwrap(), &q(0, 1));
        assert_eq!(l3.coeff(2).unwrap(), &q(1, 2));
        assert_eq!(l3.coeff(4).unwrap(), &q(1, 8));
        // (9/2)(1/(1 + 2 cos x) - 1/3) as the reference
        let m = l3.order();
        let closed = TruncatedSeries::one(m)
            .div(&TruncatedSeries::one(m).add(&cos_scaled(&one, m).scale(&q(2, 1))).unwrap())
            .unwrap()
            .sub(&TruncatedSeries::constant(q(1, 3), m))
            .unwrap()
            .scale(&q(9, 2));
        assert_eq!(l3, closed);
    }

    #[test]
    fn trig_examples() {
        let one = Rational::one();
        assert_eq!(sin_scaled(&one, 3), TruncatedSeries::new(vec![q(0, 1), q(1, 1), q(0, 1), q(-1, 6)], 3));
        assert_eq!(
            cos_scaled(&q(3, 1), 4),
            TruncatedSeries::new(vec![q(1, 1), q(0, 1), q(-9, 2), q(0, 1), q(27, 8)], 4)
        );
        assert!(sin_scaled(&Rational::zero(), 9).is_zero());
        assert_eq!(cos_scaled(&Rational::zero(), 9), TruncatedSeries::one(9));
    }

    #[test]
    fn egf_examples() {
        let n = 9;
        let tan_half = sin_scaled(&half(), n).div(&cos_scaled(&half(), n)).unwrap();
        let i2 = tan_half.scale(&q(-1, 2));
        assert_eq!(i2.egf_value(1).unwrap(), q(-1, 4));
        assert!(TruncatedSeries::zero(5).egf_value(3).unwrap().is_zero());
        assert_eq!(
            TruncatedSeries::zero(5).egf_value(6),
            Err(Error::IndexOutOfRange { index: 6, order: 5 })
        );
        assert_eq!(i2.egf_coeff(3).unwrap(), q(-1, 48));
    }

    #[test]
    fn from_egf_offsets() {
        let vals = [q(1, 1), q(3, 1), q(7, 2)];
        let s = TruncatedSeries::from_egf(&vals, 2, 2, 5);
        assert_eq!(s.coeff(2).unwrap(), &q(1, 2));
        assert_eq!(s.coeff(4).unwrap(), &q(1, 8));
        assert_eq!(s.order(), 5);
        assert_eq!(s.egf_value(4).unwrap(), q(3, 1));
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::new(vec![q(0, 1), q(-1, 4), q(0, 1), q(1, 48)], 3);
        assert_eq!(s.to_string(), "-1/4*x + 1/48*x^3 + O(x^4)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(x^2)");
    }
}
