use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{rat_mul, rat_pow, rat_to_string};

/// The exact term `coeff * z^zdeg * q^qdeg`.
///
/// Theta functions, Appell-Lerch sums and indefinite theta series take their
/// arguments in this form.  With `coeff = ±1` it is the signed monomial of the
/// theory; rational coefficients cover the numeric witness instances.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub coeff: BigRational,
    pub zdeg: i64,
    pub qdeg: i64,
}

impl Monomial {
    pub fn new(coeff: BigRational, zdeg: i64, qdeg: i64) -> Self {
        Self { coeff, zdeg, qdeg }
    }

    /// `sign * z^zdeg * q^qdeg` with `sign = ±1`.
    pub fn signed(sign: i64, zdeg: i64, qdeg: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        Self { coeff: BigRational::from_integer(sign.into()), zdeg, qdeg }
    }

    pub fn one() -> Self {
        Self::signed(1, 0, 0)
    }

    /// `q^k`.
    pub fn q(k: i64) -> Self {
        Self::signed(1, 0, k)
    }

    /// `z^k`.
    pub fn z(k: i64) -> Self {
        Self::signed(1, k, 0)
    }

    /// A z-free rational constant.
    pub fn scalar(c: BigRational) -> Self {
        Self { coeff: c, zdeg: 0, qdeg: 0 }
    }

    pub fn int(c: i64) -> Self {
        Self::scalar(BigRational::from_integer(c.into()))
    }

    pub fn frac(p: i64, d: i64) -> Self {
        Self::scalar(BigRational::new(p.into(), d.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            coeff: rat_mul(&self.coeff, &other.coeff),
            zdeg: self.zdeg + other.zdeg,
            qdeg: self.qdeg + other.qdeg,
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> Self {
        Self { coeff: self.coeff.recip(), zdeg: -self.zdeg, qdeg: -self.qdeg }
    }

    pub fn neg(&self) -> Self {
        Self { coeff: -&self.coeff, zdeg: self.zdeg, qdeg: self.qdeg }
    }

    pub fn pow(&self, n: i64) -> Self {
        Self { coeff: rat_pow(&self.coeff, n), zdeg: self.zdeg * n, qdeg: self.qdeg * n }
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: i64) -> Self {
        Self { coeff: self.coeff.clone(), zdeg: self.zdeg, qdeg: self.qdeg + k }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { coeff: rat_mul(&self.coeff, c), zdeg: self.zdeg, qdeg: self.qdeg }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.coeff.abs().is_one() || (self.zdeg == 0 && self.qdeg == 0) {
            parts.push(rat_to_string(&self.coeff.abs()));
        }
        match self.zdeg {
            0 => {}
            1 => parts.push("z".into()),
            k => parts.push(format!("z^{k}")),
        }
        match self.qdeg {
            0 => {}
            1 => parts.push("q".into()),
            k => parts.push(format!("q^{k}")),
        }
        let sign = if self.coeff.is_negative() { "-" } else { "" };
        write!(f, "{sign}{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra() {
        let x = Monomial::signed(-1, 2, 1);
        let y = Monomial::new(BigRational::new(1.into(), 3.into()), -1, 4);
        assert_eq!(x.mul(&y).div(&y), x);
        assert_eq!(x.pow(2), Monomial::signed(1, 4, 2));
        assert_eq!(y.pow(-1), y.inv());
        assert_eq!(x.to_string(), "-z^2*q");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
