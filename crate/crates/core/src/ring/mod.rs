//! Exact coefficient rings.
//!
//! Four rings are supported: arbitrary-precision integers ([`BigInt`]),
//! normalized rationals ([`BigRational`]), Gaussian rationals ([`Gaussian`])
//! and Laurent polynomials in a formal variable `z` ([`LaurentPoly`]).
//! The ring is fixed at construction time through the [`Coeff`] trait, so a
//! series over one ring can never be combined with a series over another.

mod gaussian;
mod laurent;

pub use gaussian::Gaussian;
pub use laurent::LaurentPoly;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Result, SeriesError};

/// Coefficient ring capability shared by every truncated series.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Human readable ring name used in error messages.
    const NAME: &'static str;

    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
    /// Embeds a rational, failing when the ring cannot hold it.
    fn from_rational(r: &BigRational) -> Result<Self>;

    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Multiplicative inverse if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// `self += a * b`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

/// Exact rational addition with a fast path for integers.
pub(crate) fn rat_add(a: &BigRational, b: &BigRational) -> BigRational {
    if a.denom().is_one() && b.denom().is_one() {
        BigRational::from_integer(a.numer() + b.numer())
    } else {
        a + b
    }
}

pub(crate) fn rat_sub(a: &BigRational, b: &BigRational) -> BigRational {
    if a.denom().is_one() && b.denom().is_one() {
        BigRational::from_integer(a.numer() - b.numer())
    } else {
        a - b
    }
}

pub(crate) fn rat_mul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.denom().is_one() && b.denom().is_one() {
        BigRational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

/// `c^n` for any integer `n`; `c` must be nonzero when `n < 0`.
pub fn rat_pow(c: &BigRational, n: i64) -> BigRational {
    let mut base = if n < 0 { c.recip() } else { c.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = BigRational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = rat_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = rat_mul(&base, &base);
        }
    }
    acc
}

/// Formats a rational as `p` or `p/q`.
pub fn rat_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || SeriesError::Json(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

fn json_str(v: &Value) -> Result<&str> {
    v.as_str()
        .ok_or_else(|| SeriesError::Json(format!("expected a string coefficient, got {v}")))
}

impl Coeff for BigInt {
    const NAME: &'static str = "ArbInt";

    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn is_ring_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn from_rational(r: &BigRational) -> Result<Self> {
        if r.denom().is_one() {
            Ok(r.numer().clone())
        } else {
            Err(SeriesError::NonIntegral(rat_to_string(r)))
        }
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        let s = json_str(v)?;
        Self::from_rational(&parse_rational(s)?)
    }
}

impl Coeff for BigRational {
    const NAME: &'static str = "BigRational";

    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn is_ring_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(r: &BigRational) -> Result<Self> {
        Ok(r.clone())
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = rat_add(self, other);
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self = rat_sub(self, other);
    }
    fn mul_ref(&self, other: &Self) -> Self {
        rat_mul(self, other)
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn to_json(&self) -> Value {
        Value::String(rat_to_string(self))
    }
    fn from_json(v: &Value) -> Result<Self> {
        parse_rational(json_str(v)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn rationals_stay_normalized() {
        let mut a = q(2, 4);
        assert_eq!(a.numer(), &BigInt::from(1));
        a.add_assign_ref(&q(1, 6));
        assert_eq!(a, q(2, 3));
        assert!(a.denom() > &BigInt::zero());
        assert_eq!(q(3, -6), q(-1, 2));
    }

    #[test]
    fn integer_units() {
        assert!(BigInt::from(-1).unit_inverse().is_some());
        assert!(BigInt::from(2).unit_inverse().is_none());
        assert_eq!(q(2, 3).unit_inverse(), Some(q(3, 2)));
    }

    #[test]
    fn pow_handles_negative_exponents() {
        assert_eq!(rat_pow(&q(2, 3), -2), q(9, 4));
        assert_eq!(rat_pow(&q(-1, 1), 7), q(-1, 1));
        assert_eq!(rat_pow(&q(5, 1), 0), q(1, 1));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-3/6").unwrap(), q(-1, 2));
        assert_eq!(rat_to_string(&q(4, 2)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(BigInt::from_json(&Value::String("1/2".into())).is_err());
    }
}
