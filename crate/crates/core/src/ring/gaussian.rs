use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::{parse_rational, rat_add, rat_mul, rat_sub, rat_to_string, Coeff};
use crate::error::{Result, SeriesError};

/// Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: Zero::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: Zero::zero(), im: One::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> BigRational {
        rat_add(&rat_mul(&self.re, &self.re), &rat_mul(&self.im, &self.im))
    }

    pub fn pow(&self, n: i64) -> Option<Self> {
        let mut base = if n < 0 { self.unit_inverse()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::ring_one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        Some(acc)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = rat_to_string(&self.re);
        if self.im.is_zero() {
            return f.write_str(&re);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{re}{sign}{}*i", rat_to_string(&self.im.abs()))
    }
}

impl Coeff for Gaussian {
    const NAME: &'static str = "GaussianRational";

    fn ring_zero() -> Self {
        Self { re: Zero::zero(), im: Zero::zero() }
    }
    fn ring_one() -> Self {
        Self { re: One::one(), im: Zero::zero() }
    }
    fn is_ring_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        Self::real(BigRational::from_i64(n))
    }
    fn from_rational(r: &BigRational) -> Result<Self> {
        Ok(Self::real(r.clone()))
    }
    fn add_assign_ref(&mut self, other: &Self) {
        self.re = rat_add(&self.re, &other.re);
        self.im = rat_add(&self.im, &other.im);
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        self.re = rat_sub(&self.re, &other.re);
        self.im = rat_sub(&self.im, &other.im);
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let re = rat_sub(&rat_mul(&self.re, &other.re), &rat_mul(&self.im, &other.im));
        let im = rat_add(&rat_mul(&self.re, &other.im), &rat_mul(&self.im, &other.re));
        Self { re, im }
    }
    fn neg_ref(&self) -> Self {
        Self { re: -&self.re, im: -&self.im }
    }
    fn unit_inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self { re: &c.re / &n, im: &c.im / &n })
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        let s = v
            .as_str()
            .ok_or_else(|| SeriesError::Json(format!("expected a string coefficient, got {v}")))?
            .trim();
        let Some(body) = s.strip_suffix("*i") else {
            return Ok(Self::real(parse_rational(s)?));
        };
        // split at the last sign that is not the leading one
        let cut = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| SeriesError::Json(format!("malformed gaussian {s:?}")))?;
        let re = parse_rational(&body[..cut])?;
        let im = parse_rational(body[cut..].trim_start_matches('+'))?;
        Ok(Self { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> Gaussian {
        Gaussian::new(BigRational::from_i64(a), BigRational::from_i64(b))
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Gaussian::i();
        assert_eq!(i.mul_ref(&i), g(-1, 0));
        assert_eq!(i.pow(-1).unwrap(), g(0, -1));
        assert_eq!(i.pow(4).unwrap(), g(1, 0));
    }

    #[test]
    fn inverse_round_trip() {
        let a = g(3, -4);
        let inv = a.unit_inverse().unwrap();
        assert_eq!(a.mul_ref(&inv), g(1, 0));
        assert!(g(0, 0).unit_inverse().is_none());
    }

    #[test]
    fn json_round_trip() {
        for v in [g(1, 2), g(-3, -1), g(0, 5), g(7, 0)] {
            let back = Gaussian::from_json(&v.to_json()).unwrap();
            assert_eq!(back, v);
        }
        let half = Gaussian::new(BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 4.into()));
        assert_eq!(half.to_string(), "1/2-3/4*i");
        assert_eq!(Gaussian::from_json(&half.to_json()).unwrap(), half);
    }
}
