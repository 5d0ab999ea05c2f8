//! Pochhammer symbols, eta quotients and `z`-specialization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Result, SeriesError};
use crate::eval::{SeriesValue, ZEval};
use crate::monomial::Monomial;
use crate::ring::{Coeff, Gaussian, LaurentPoly};
use crate::series::QSeries;

/// Number of factors in a Pochhammer symbol.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Count {
    Finite(u64),
    Infinite,
}

/// A product of infinite and finite Pochhammer symbols, expanded together.
///
/// Factors of negative q-degree lower the certified order, so the expansion
/// starts from a correspondingly higher working order.
#[derive(Clone, Debug, Default)]
pub struct BinomialProduct {
    factors: Vec<(Monomial, i64, Count)>,
}

impl BinomialProduct {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `(x; q^step)_count`.
    pub fn poch(mut self, x: Monomial, step: i64, count: Count) -> Self {
        self.factors.push((x, step, count));
        self
    }

    /// Appends `(q^k; q^k)_inf`.
    pub fn eta(self, k: i64) -> Self {
        self.poch(Monomial::q(k), k, Count::Infinite)
    }

    /// Appends `j(x; q^k) = (x, q^k/x, q^k; q^k)_inf`.
    pub fn theta(self, x: &Monomial, k: i64) -> Self {
        let conj = x.inv().shift_q(k);
        self.poch(x.clone(), k, Count::Infinite)
            .poch(conj, k, Count::Infinite)
            .eta(k)
    }

    fn validate(&self) -> Result<()> {
        for (x, step, count) in &self.factors {
            if *count == Count::Infinite && *step <= 0 {
                return Err(SeriesError::NonConvergent(format!(
                    "({x}; q^{step})_inf never stabilizes"
                )));
            }
        }
        Ok(())
    }

    /// Sum of the negative q-degrees over all factors.
    fn deficit(&self) -> i64 {
        let mut v = 0;
        for (x, step, count) in &self.factors {
            let n = match count {
                Count::Finite(n) => *n as i64,
                // degrees x.qdeg + step*k are negative only for k < -x.qdeg/step
                Count::Infinite => {
                    if x.qdeg >= 0 {
                        0
                    } else {
                        (-x.qdeg + step - 1) / step
                    }
                }
            };
            for k in 0..n {
                let d = x.qdeg + step * k;
                if d < 0 {
                    v += d;
                }
            }
        }
        v
    }

    pub fn expand<E: ZEval>(&self, e: &E, order: i64) -> Result<E::Value> {
        self.validate()?;
        let work = order - self.deficit();
        let mut acc = e.one(work)?;
        for (x, step, count) in &self.factors {
            let mut k = 0i64;
            loop {
                if let Count::Finite(n) = count {
                    if k >= *n as i64 {
                        break;
                    }
                }
                let w = x.shift_q(step * k);
                if w.qdeg > work {
                    if *step > 0 {
                        break;
                    }
                } else {
                    acc = e.mul_one_minus(&acc, &w)?;
                }
                k += 1;
            }
        }
        Ok(acc.truncate(order))
    }
}

/// `(x; q^step)_count` to order `order`.
pub fn pochhammer<E: ZEval>(e: &E, x: &Monomial, step: i64, count: Count, order: i64) -> Result<E::Value> {
    BinomialProduct::new().poch(x.clone(), step, count).expand(e, order)
}

/// `J_k = (q^k; q^k)_inf` with integer coefficients.
pub fn etaq(k: i64, order: i64) -> QSeries<BigInt> {
    assert!(k >= 1, "etaq needs k >= 1");
    let mut acc = QSeries::<BigInt>::one(order);
    let mut d = k;
    while d <= order {
        acc = acc.mul_one_minus(&BigInt::one(), d);
        d += k;
    }
    acc
}

/// `c q^shift prod J_k^e` over `(k, e)` pairs, exact through `order`.
///
/// Negative exponents are inverted; every `J_k` has constant term 1 so the
/// inversion never loses order.
pub fn eta_quotient(c: i64, shift: i64, factors: &[(i64, i64)], order: i64) -> QSeries<BigInt> {
    let inner = order - shift;
    let mut num = QSeries::<BigInt>::one(inner.max(0));
    let mut den = QSeries::<BigInt>::one(inner.max(0));
    for &(k, ex) in factors {
        let j = etaq(k, inner.max(0));
        for _ in 0..ex.unsigned_abs() {
            if ex > 0 {
                num = num.mul(&j);
            } else {
                den = den.mul(&j);
            }
        }
    }
    if inner < 0 {
        return QSeries::zero(order);
    }
    let inv = den.inverse().expect("eta products have constant term 1");
    num.mul(&inv).scale(&BigInt::from(c)).shift(shift).truncate(order)
}

/// An eta quotient with a rational prefactor, evaluated in any mode.
pub fn eta_value<E: ZEval>(e: &E, c: &BigRational, shift: i64, factors: &[(i64, i64)], order: i64) -> Result<E::Value> {
    let s = eta_quotient(1, shift, factors, order);
    let terms = s.terms().map(|(x, v)| Monomial::new(BigRational::from_integer(v.clone()), 0, x)).collect::<Vec<_>>();
    e.termsum(terms, order)?.scale(c)
}

/// `(z^a - z^b) / (1 - z)` as an exact Laurent polynomial.
pub fn geom_ratio(a: i64, b: i64) -> LaurentPoly {
    use std::cmp::Ordering;
    match a.cmp(&b) {
        Ordering::Equal => LaurentPoly::ring_zero(),
        Ordering::Less => LaurentPoly::from_terms((a..b).map(|i| (i, BigRational::one())).collect()),
        Ordering::Greater => LaurentPoly::from_terms((b..a).map(|i| (i, -BigRational::one())).collect()),
    }
}

/// Specializes a formal-`z` series at a nonzero rational point.
pub fn eval_z_rational(f: &QSeries<LaurentPoly>, z0: &BigRational) -> Result<QSeries<BigRational>> {
    if z0.is_zero() {
        return Err(SeriesError::Pole("z = 0".into()));
    }
    Ok(f.map_coeffs(|p| p.eval_rational(z0)))
}

/// Specializes a formal-`z` series at a nonzero Gaussian rational point.
pub fn eval_z_gaussian(f: &QSeries<LaurentPoly>, z0: &Gaussian) -> Result<QSeries<Gaussian>> {
    if z0.is_ring_zero() {
        return Err(SeriesError::Pole("z = 0".into()));
    }
    Ok(f.map_coeffs(|p| p.eval_gaussian(z0)))
}

/// Embeds an integer series into any evaluation mode.
pub fn embed<E: ZEval>(e: &E, s: &QSeries<BigInt>) -> Result<E::Value> {
    let terms = s.terms().map(|(x, v)| Monomial::new(BigRational::from_integer(v.clone()), 0, x)).collect::<Vec<_>>();
    e.termsum(terms, s.order())
}

/// Embeds a rational series into any evaluation mode.
pub fn embed_rational<E: ZEval>(e: &E, s: &QSeries<BigRational>) -> Result<E::Value> {
    let terms = s.terms().map(|(x, v)| Monomial::new(v.clone(), 0, x)).collect::<Vec<_>>();
    e.termsum(terms, s.order())
}

/// Converts integer coefficients to rationals.
pub fn to_rational(s: &QSeries<BigInt>) -> QSeries<BigRational> {
    s.map_coeffs(|c| BigRational::from_integer(c.clone()))
}

/// Converts rational coefficients back to integers, failing on a proper fraction.
pub fn to_integer(s: &QSeries<BigRational>) -> Result<QSeries<BigInt>> {
    s.try_map_coeffs(BigInt::from_rational)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::{Formal, Integral};

    fn ints(v: &[i64]) -> QSeries<BigInt> {
        QSeries::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn finite_pochhammers() {
        let p = pochhammer(&Integral, &Monomial::q(1), 1, Count::Finite(2), 5).unwrap();
        assert!(p.compare(&ints(&[1, -1, -1, 1, 0, 0])).is_match());
        let p = pochhammer(&Integral, &Monomial::signed(-1, 0, 1), 2, Count::Finite(1), 3).unwrap();
        assert!(p.compare(&ints(&[1, 1, 0, 0])).is_match());
    }

    #[test]
    fn bivariate_pochhammer() {
        let p = BinomialProduct::new()
            .poch(Monomial::signed(1, 1, 1), 2, Count::Finite(1))
            .poch(Monomial::signed(1, -1, 1), 2, Count::Finite(1))
            .expand(&Formal, 4)
            .unwrap();
        let zz = LaurentPoly::from_terms(vec![(-1, -BigRational::one()), (1, -BigRational::one())]);
        assert_eq!(p.coeff(0), LaurentPoly::ring_one());
        assert_eq!(p.coeff(1), zz);
        assert_eq!(p.coeff(2), LaurentPoly::ring_one());
        assert_eq!(p.coeff(3), LaurentPoly::ring_zero());
    }

    #[test]
    fn etaq_pins() {
        assert!(etaq(1, 7).compare(&ints(&[1, -1, -1, 0, 0, 1, 0, 1])).is_match());
        assert!(etaq(2, 5).compare(&ints(&[1, 0, -1, 0, -1, 0])).is_match());
        assert!(etaq(1, 0).compare(&ints(&[1])).is_match());
    }

    #[test]
    fn inverse_eta_counts_partitions() {
        let p = etaq(1, 5).inverse().unwrap();
        assert!(p.compare(&ints(&[1, 1, 2, 3, 5, 7])).is_match());
    }

    #[test]
    fn negative_degree_factors_keep_order() {
        // (q^-2; q)_inf contains the factor (1 - q^0) and vanishes
        let p = pochhammer(&Integral, &Monomial::q(-2), 1, Count::Infinite, 10).unwrap();
        assert_eq!(p.order(), 10);
        assert!(p.is_zero());
        let p = pochhammer(&Integral, &Monomial::signed(-1, 0, -2), 1, Count::Infinite, 10).unwrap();
        assert_eq!(p.order(), 10);
        assert_eq!(p.min_exp(), -3);
    }

    #[test]
    fn non_convergent_product() {
        assert!(matches!(
            pochhammer(&Integral, &Monomial::q(1), 0, Count::Infinite, 5),
            Err(SeriesError::NonConvergent(_))
        ));
    }

    #[test]
    fn geom_ratio_pins() {
        assert_eq!(geom_ratio(0, 1), LaurentPoly::ring_one());
        assert_eq!(geom_ratio(-1, 2).terms().len(), 3);
        let g = geom_ratio(2, -2);
        assert_eq!(g.at_one(), BigRational::from_i64(-4));
        assert_eq!(g.coeff(-2), -BigRational::one());
    }

    #[test]
    fn eta_quotient_with_shift() {
        // q / J_1 starts at q with partition numbers
        let s = eta_quotient(1, 1, &[(1, -1)], 4);
        assert!(s.compare(&ints(&[0, 1, 1, 2, 3])).is_match());
        let s = eta_quotient(1, -1, &[(1, 1)], 3);
        assert_eq!(s.min_exp(), -1);
        assert_eq!(s.order(), 3);
    }
}
