//! Hurwitz class numbers by reduced-form enumeration.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Result, SeriesError};
use crate::series::QSeries;

/// `12 H(n)`, counting reduced forms `(a, b, c)` with `b^2 - 4ac = -n`.
///
/// Forms proportional to `x^2 + y^2` count 6 and forms proportional to
/// `x^2 + xy + y^2` count 4; every other form counts 12.
pub fn hurwitz12(n: u64) -> i64 {
    if n == 0 {
        return -1;
    }
    let n = n as i64;
    let mut total = 0;
    let mut a = 1i64;
    while 3 * a * a <= n {
        // b has the parity of n
        let mut b = -a + ((n - (-a)).rem_euclid(2));
        while b <= a {
            let num = b * b + n;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                let boundary = b.abs() == a || a == c;
                if c >= a && !(boundary && b < 0) {
                    total += if b == 0 && a == c {
                        6
                    } else if b == a && a == c {
                        4
                    } else {
                        12
                    };
                }
            }
            b += 2;
        }
        a += 1;
    }
    total
}

/// `H(n)` as an exact rational.
pub fn hurwitz(n: u64) -> BigRational {
    BigRational::new(hurwitz12(n).into(), 12.into())
}

/// Kronecker's `F(m)`: `H(m)` for `m = 7 mod 8`, `3 H(m)` for `m = 3 mod 8`.
pub fn kronecker_f(m: i64) -> Result<i64> {
    if m < 0 || m % 4 != 3 {
        return Err(SeriesError::UndefinedResidue(m));
    }
    let h12 = hurwitz12(m as u64);
    let scaled = if m % 8 == 7 { h12 } else { 3 * h12 };
    if scaled % 12 != 0 {
        return Err(SeriesError::NonIntegral(format!("{scaled}/12")));
    }
    Ok(scaled / 12)
}

/// `sum_{n >= 0} F(a n + b) q^n`, omitting terms with `a n + b < 0`.
pub fn genfun_f(a: i64, b: i64, order: i64) -> Result<QSeries<BigInt>> {
    if a < 1 {
        return Err(SeriesError::InvalidArgument(format!("modulus {a} must be positive")));
    }
    let mut terms = Vec::new();
    for n in 0..=order.max(-1) {
        let m = a * n + b;
        if m >= 0 {
            terms.push((n, BigInt::from(kronecker_f(m)?)));
        }
    }
    Ok(QSeries::from_terms(terms, order))
}

/// `sum_{n >= 0} H(a n + b) q^n` with exact rational coefficients.
pub fn genfun_h(a: i64, b: i64, order: i64) -> Result<QSeries<BigRational>> {
    if a < 1 {
        return Err(SeriesError::InvalidArgument(format!("modulus {a} must be positive")));
    }
    let terms = (0..=order.max(-1))
        .filter(|n| a * n + b >= 0)
        .map(|n| (n, hurwitz((a * n + b) as u64)));
    Ok(QSeries::from_terms(terms, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pins() {
        assert_eq!(hurwitz12(0), -1);
        assert_eq!(hurwitz12(1), 0);
        assert_eq!(hurwitz12(3), 4);
        assert_eq!(hurwitz12(4), 6);
        assert_eq!(hurwitz12(7), 12);
        assert_eq!(hurwitz12(23), 36);
        assert_eq!(hurwitz(3), BigRational::new(1.into(), 3.into()));
    }

    #[test]
    fn kronecker_f_pins() {
        assert_eq!(kronecker_f(3).unwrap(), 1);
        assert_eq!(kronecker_f(7).unwrap(), 1);
        assert_eq!(kronecker_f(11).unwrap(), 3);
        assert!(matches!(kronecker_f(5), Err(SeriesError::UndefinedResidue(5))));
    }

    #[test]
    fn generating_function_pins() {
        let f4 = genfun_f(4, -1, 6).unwrap();
        let want: Vec<i64> = vec![0, 1, 1, 3, 2, 3, 3];
        for (e, w) in want.iter().enumerate() {
            assert_eq!(f4.coeff(e as i64), BigInt::from(*w));
        }
        let f8 = genfun_f(8, -1, 4).unwrap();
        for (e, w) in [0, 1, 2, 3, 3].iter().enumerate() {
            assert_eq!(f8.coeff(e as i64), BigInt::from(*w));
        }
        let h = genfun_h(24, 7, 2).unwrap();
        for (e, w) in [1, 3, 4].iter().enumerate() {
            assert_eq!(h.coeff(e as i64), BigRational::from_integer((*w).into()));
        }
        assert!(genfun_h(4, 1, 10).unwrap().is_zero());
        assert_eq!(genfun_h(1, 0, 0).unwrap().coeff(0), BigRational::new((-1).into(), 12.into()));
    }
}
