//! Evaluation modes for `z`-dependent builders.
//!
//! Every theta, Appell-Lerch and Eulerian builder is written once against
//! [`ZEval`]; the mode decides what `z` means:
//!
//! * [`Integral`]: no `z` at all, integer coefficients.
//! * [`Formal`]: `z` stays a formal variable (Laurent polynomial coefficients).
//! * [`AtRational`] / [`AtGaussian`]: `z` specialized to an exact point.
//! * [`JetAtOne`]: first-order expansion at `z = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Result, SeriesError};
use crate::jet::Jet1;
use crate::monomial::Monomial;
use crate::ring::{rat_mul, rat_pow, rat_sub, Coeff, Gaussian, LaurentPoly};
use crate::series::QSeries;

/// Series-like values produced by an evaluation mode.
pub trait SeriesValue: Clone + Send + Sync + std::fmt::Debug {
    fn order(&self) -> i64;
    fn lower_bound(&self) -> i64;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inverse(&self) -> Result<Self>;
    fn scale(&self, c: &BigRational) -> Result<Self>;
    fn shift(&self, k: i64) -> Self;
    fn neg_q(&self) -> Self;
    fn truncate(&self, order: i64) -> Self;

    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inverse()?))
    }
}

impl<R: Coeff> SeriesValue for QSeries<R> {
    fn order(&self) -> i64 {
        QSeries::order(self)
    }
    fn lower_bound(&self) -> i64 {
        QSeries::lower_bound(self)
    }
    fn add(&self, o: &Self) -> Self {
        QSeries::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        QSeries::sub(self, o)
    }
    fn neg(&self) -> Self {
        QSeries::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        QSeries::mul(self, o)
    }
    fn inverse(&self) -> Result<Self> {
        QSeries::inverse(self)
    }
    fn scale(&self, c: &BigRational) -> Result<Self> {
        Ok(QSeries::scale(self, &R::from_rational(c)?))
    }
    fn shift(&self, k: i64) -> Self {
        QSeries::shift(self, k)
    }
    fn neg_q(&self) -> Self {
        QSeries::neg_q(self)
    }
    fn truncate(&self, order: i64) -> Self {
        QSeries::truncate(self, order)
    }
}

impl SeriesValue for Jet1 {
    fn order(&self) -> i64 {
        Jet1::order(self)
    }
    fn lower_bound(&self) -> i64 {
        Jet1::lower_bound(self)
    }
    fn add(&self, o: &Self) -> Self {
        Jet1::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Jet1::sub(self, o)
    }
    fn neg(&self) -> Self {
        Jet1::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        Jet1::mul(self, o)
    }
    fn inverse(&self) -> Result<Self> {
        Jet1::inverse(self)
    }
    fn scale(&self, c: &BigRational) -> Result<Self> {
        Ok(Jet1::scale(self, c))
    }
    fn shift(&self, k: i64) -> Self {
        Jet1::shift(self, k)
    }
    fn neg_q(&self) -> Self {
        Jet1::neg_q(self)
    }
    fn truncate(&self, order: i64) -> Self {
        Jet1::truncate(self, order)
    }
}

/// A way of assigning meaning to `z`.
pub trait ZEval: Sync {
    type Value: SeriesValue;

    fn label(&self) -> String;

    /// `sum c z^a q^e` over `terms`, exact through `order`.
    ///
    /// Every term with `qdeg <= order` must be supplied.
    fn termsum<I: IntoIterator<Item = Monomial>>(&self, terms: I, order: i64) -> Result<Self::Value>;

    /// `v * (1 - w)` for an exact monomial `w`.
    fn mul_one_minus(&self, v: &Self::Value, w: &Monomial) -> Result<Self::Value>;

    /// `v / (1 - w)`, expanding geometrically in the direction of positive q-degree.
    fn div_one_minus(&self, v: &Self::Value, w: &Monomial) -> Result<Self::Value>;

    fn one(&self, order: i64) -> Result<Self::Value> {
        self.termsum([Monomial::one()], order)
    }

    fn zero(&self, order: i64) -> Result<Self::Value> {
        self.termsum(std::iter::empty(), order)
    }

    fn monomial(&self, m: &Monomial, order: i64) -> Result<Self::Value> {
        self.termsum([m.clone()], order)
    }

    /// Multiplies by an exact monomial.
    fn mul_monomial(&self, v: &Self::Value, m: &Monomial) -> Result<Self::Value> {
        let order = v.order() + m.qdeg.max(0) + (-v.lower_bound()).max(0) + 1;
        Ok(v.mul(&self.monomial(m, order.max(m.qdeg))?))
    }
}

/// Maps a monomial to a coefficient of a concrete ring.
pub trait PointEval: Sync {
    type R: Coeff;
    fn label(&self) -> String;
    fn coeff_of(&self, m: &Monomial) -> Result<Self::R>;
}

fn div_one_minus_series<R: Coeff>(v: &QSeries<R>, w: R, winv: Option<R>, d: i64) -> Result<QSeries<R>> {
    match d.signum() {
        1 => Ok(v.div_one_minus(&w, d)),
        -1 => {
            // 1/(1-w) = -w^{-1} / (1 - w^{-1})
            let winv = winv.ok_or_else(|| SeriesError::Pole("zero monomial in denominator".into()))?;
            let g = v.div_one_minus(&winv, -d);
            Ok(g.scale(&winv.neg_ref()).shift(-d))
        }
        _ => {
            let mut s = R::ring_one();
            s.sub_assign_ref(&w);
            if s.is_ring_zero() {
                return Err(SeriesError::Pole("1 - w vanishes".into()));
            }
            let inv = s.unit_inverse().ok_or_else(|| SeriesError::NonUnit {
                ring: R::NAME,
                exp: 0,
                coeff: s.to_string(),
            })?;
            Ok(v.scale(&inv))
        }
    }
}

impl<P: PointEval> ZEval for P {
    type Value = QSeries<P::R>;

    fn label(&self) -> String {
        PointEval::label(self)
    }

    fn termsum<I: IntoIterator<Item = Monomial>>(&self, terms: I, order: i64) -> Result<Self::Value> {
        let mut kept = Vec::new();
        for m in terms {
            if m.qdeg <= order && !m.coeff.is_zero() {
                kept.push((m.qdeg, self.coeff_of(&m)?));
            }
        }
        Ok(QSeries::from_terms(kept, order))
    }

    fn mul_one_minus(&self, v: &Self::Value, w: &Monomial) -> Result<Self::Value> {
        Ok(v.mul_one_minus(&self.coeff_of(w)?, w.qdeg))
    }

    fn div_one_minus(&self, v: &Self::Value, w: &Monomial) -> Result<Self::Value> {
        let winv = if w.qdeg < 0 && !w.is_zero() { Some(self.coeff_of(&w.inv())?) } else { None };
        div_one_minus_series(v, self.coeff_of(w)?, winv, w.qdeg)
    }

    fn mul_monomial(&self, v: &Self::Value, m: &Monomial) -> Result<Self::Value> {
        Ok(v.scale(&self.coeff_of(m)?).shift(m.qdeg))
    }
}

/// `z`-free evaluation with integer coefficients.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integral;

impl PointEval for Integral {
    type R = BigInt;
    fn label(&self) -> String {
        "integral".into()
    }
    fn coeff_of(&self, m: &Monomial) -> Result<BigInt> {
        if m.zdeg != 0 {
            return Err(SeriesError::InvalidArgument(format!("z-dependent term {m} in a z-free evaluation")));
        }
        BigInt::from_rational(&m.coeff)
    }
}

/// `z` kept formal: coefficients are Laurent polynomials.
#[derive(Clone, Copy, Debug, Default)]
pub struct Formal;

impl PointEval for Formal {
    type R = LaurentPoly;
    fn label(&self) -> String {
        "formal z".into()
    }
    fn coeff_of(&self, m: &Monomial) -> Result<LaurentPoly> {
        Ok(LaurentPoly::monomial(m.coeff.clone(), m.zdeg))
    }
}

/// `z` specialized to a nonzero rational.
#[derive(Clone, Debug)]
pub struct AtRational(pub BigRational);

impl AtRational {
    pub fn int(z: i64) -> Self {
        Self(BigRational::from_integer(z.into()))
    }
}

impl PointEval for AtRational {
    type R = BigRational;
    fn label(&self) -> String {
        format!("z = {}", crate::ring::rat_to_string(&self.0))
    }
    fn coeff_of(&self, m: &Monomial) -> Result<BigRational> {
        if m.zdeg != 0 && self.0.is_zero() {
            return Err(SeriesError::Pole("z = 0".into()));
        }
        Ok(rat_mul(&m.coeff, &rat_pow(&self.0, m.zdeg)))
    }
}

/// `z` specialized to a nonzero Gaussian rational.
#[derive(Clone, Debug)]
pub struct AtGaussian(pub Gaussian);

impl PointEval for AtGaussian {
    type R = Gaussian;
    fn label(&self) -> String {
        format!("z = {}", self.0)
    }
    fn coeff_of(&self, m: &Monomial) -> Result<Gaussian> {
        let p = self.0.pow(m.zdeg).ok_or_else(|| SeriesError::Pole("z = 0".into()))?;
        Ok(Gaussian::real(m.coeff.clone()).mul_ref(&p))
    }
}

/// First-order expansion at `z = 1`.
#[derive(Clone, Copy, Debug, Default)]
pub struct JetAtOne;

impl ZEval for JetAtOne {
    type Value = Jet1;

    fn label(&self) -> String {
        "jet at z = 1".into()
    }

    fn termsum<I: IntoIterator<Item = Monomial>>(&self, terms: I, order: i64) -> Result<Jet1> {
        Ok(Jet1::of_termsum(terms, order))
    }

    fn mul_one_minus(&self, v: &Jet1, w: &Monomial) -> Result<Jet1> {
        // (1 - w) has value 1 - c q^d and derivative -a c q^d
        let c = &w.coeff;
        let ac = rat_mul(c, &BigRational::from_integer(w.zdeg.into()));
        let f0 = v.f0.mul_one_minus(c, w.qdeg);
        let f1 = v.f1.mul_one_minus(c, w.qdeg).sub(&v.f0.scale(&ac).shift(w.qdeg));
        Ok(Jet1::new(f0, f1))
    }

    fn div_one_minus(&self, v: &Jet1, w: &Monomial) -> Result<Jet1> {
        // (u/b)' = u'/b - u b'/b^2 with b' = -a c q^d
        let c = &w.coeff;
        let cinv = if c.is_zero() { None } else { Some(c.recip()) };
        let div = |s: &QSeries<BigRational>| div_one_minus_series(s, c.clone(), cinv.clone(), w.qdeg);
        let g0 = div(&v.f0)?;
        let g1 = div(&v.f1)?;
        let ac = rat_mul(c, &BigRational::from_integer(w.zdeg.into()));
        let f1 = if ac.is_zero() { g1 } else { g1.add(&div(&g0)?.scale(&ac).shift(w.qdeg)) };
        Ok(Jet1::new(g0, f1))
    }

    fn mul_monomial(&self, v: &Jet1, m: &Monomial) -> Result<Jet1> {
        // (c z^a q^d u)' = c q^d (a u + u')
        let f0 = v.f0.scale(&m.coeff).shift(m.qdeg);
        let a = BigRational::from_integer(m.zdeg.into());
        let f1 = v.f1.add(&v.f0.scale(&a)).scale(&m.coeff).shift(m.qdeg);
        Ok(Jet1::new(f0, f1))
    }
}

/// Re-runs `build` with a larger working order until the result is certified through `target`.
pub fn with_order<V, F>(target: i64, mut build: F) -> Result<V>
where
    V: SeriesValue,
    F: FnMut(i64) -> Result<V>,
{
    let mut work = target;
    for _ in 0..12 {
        let v = build(work)?;
        if v.order() >= target {
            return Ok(v.truncate(target));
        }
        work += (target - v.order()).max(1);
    }
    Err(SeriesError::NonConvergent(format!("could not certify order {target}")))
}

/// `1 - c` as a rational, used by callers that need to test for poles up front.
pub fn one_minus(c: &BigRational) -> BigRational {
    rat_sub(&BigRational::one(), c)
}
