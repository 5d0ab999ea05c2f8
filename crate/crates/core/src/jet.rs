//! First-order Taylor data at `z = 1`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::monomial::Monomial;
use crate::ring::{rat_mul, Coeff};
use crate::series::QSeries;

type RatSeries = QSeries<BigRational>;

/// The pair `(f(1), df/dz(1))` of a `z`-dependent q-series.
///
/// Arithmetic follows the product and quotient rules, so a jet built from
/// elementary factors carries the exact derivative of the whole expression.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jet1 {
    pub f0: RatSeries,
    pub f1: RatSeries,
}

impl Jet1 {
    pub fn new(f0: RatSeries, f1: RatSeries) -> Self {
        Self { f0, f1 }
    }

    /// A `z`-free series: derivative part zero.
    pub fn constant(f0: RatSeries) -> Self {
        let f1 = RatSeries::zero(f0.order());
        Self { f0, f1 }
    }

    /// Jet of `sum c z^zdeg q^qdeg` over the given terms; terms above `order` are ignored.
    pub fn of_termsum<I: IntoIterator<Item = Monomial>>(terms: I, order: i64) -> Self {
        let mut v0 = Vec::new();
        let mut v1 = Vec::new();
        for m in terms {
            if m.qdeg > order || m.coeff.is_zero() {
                continue;
            }
            if m.zdeg != 0 {
                v1.push((m.qdeg, rat_mul(&m.coeff, &BigRational::from_i64(m.zdeg))));
            }
            v0.push((m.qdeg, m.coeff));
        }
        Self { f0: RatSeries::from_terms(v0, order), f1: RatSeries::from_terms(v1, order) }
    }

    pub fn order(&self) -> i64 {
        self.f0.order().min(self.f1.order())
    }

    pub fn lower_bound(&self) -> i64 {
        self.f0.lower_bound().min(self.f1.lower_bound())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { f0: self.f0.add(&o.f0), f1: self.f1.add(&o.f1) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { f0: self.f0.sub(&o.f0), f1: self.f1.sub(&o.f1) }
    }

    pub fn neg(&self) -> Self {
        Self { f0: self.f0.neg(), f1: self.f1.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let f1 = self.f0.mul(&o.f1).add(&self.f1.mul(&o.f0));
        Self { f0: self.f0.mul(&o.f0), f1 }
    }

    /// `1/u` with derivative `-u'/u^2`; needs an invertible value part.
    pub fn inverse(&self) -> Result<Self> {
        let inv = self.f0.inverse()?;
        let f1 = self.f1.mul(&inv).mul(&inv).neg();
        Ok(Self { f0: inv, f1 })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inverse()?))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { f0: self.f0.scale(c), f1: self.f1.scale(c) }
    }

    pub fn shift(&self, k: i64) -> Self {
        Self { f0: self.f0.shift(k), f1: self.f1.shift(k) }
    }

    pub fn neg_q(&self) -> Self {
        Self { f0: self.f0.neg_q(), f1: self.f1.neg_q() }
    }

    pub fn truncate(&self, order: i64) -> Self {
        Self { f0: self.f0.truncate(order), f1: self.f1.truncate(order) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_jet(order: i64) -> Jet1 {
        Jet1::of_termsum([Monomial::z(1)], order)
    }

    #[test]
    fn constants_have_zero_derivative() {
        let c = Jet1::constant(RatSeries::one(5)).scale(&BigRational::from_i64(7));
        assert!(c.f1.is_zero());
        let u = z_jet(5).mul(&c);
        assert_eq!(u.f1, RatSeries::monomial(BigRational::from_i64(7), 0, 5));
    }

    #[test]
    fn z_squared() {
        let u = z_jet(4);
        let sq = u.mul(&u);
        assert_eq!(sq.f0, RatSeries::one(4));
        assert_eq!(sq.f1, RatSeries::monomial(BigRational::from_i64(2), 0, 4));
    }

    #[test]
    fn quotient_rule() {
        // d/dz (1/z) = -1
        let inv = z_jet(3).inverse().unwrap();
        assert_eq!(inv.f1, RatSeries::monomial(BigRational::from_i64(-1), 0, 3));
    }

    #[test]
    fn term_sums() {
        let j = Jet1::of_termsum([Monomial::signed(1, 3, 5)], 10);
        assert_eq!(j.f0, RatSeries::monomial(BigRational::from_i64(1), 5, 10));
        assert_eq!(j.f1, RatSeries::monomial(BigRational::from_i64(3), 5, 10));
        let empty = Jet1::of_termsum(std::iter::empty(), 10);
        assert!(empty.f0.is_zero() && empty.f1.is_zero());
    }
}
