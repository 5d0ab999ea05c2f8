//! Theta functions, Appell-Lerch sums and indefinite theta building blocks.
//!
//! Every builder takes a base exponent `k` meaning the series is in `q^k`
//! (for `j(x; q^k)`, `m(x, q^k, z)`, `f_{a,b,c}(x, y, q^k)`).

use num_rational::BigRational;

use crate::error::{Result, SeriesError};
use crate::eval::{with_order, AtRational, SeriesValue, ZEval};
use crate::monomial::Monomial;
use crate::products::{eta_value, BinomialProduct};
use crate::series::{Comparison, QSeries};

/// Integers `n` with `f(n) <= limit` for a convex integer sequence `f`.
///
/// Scans outward from 0 in both directions and stops once `f` exceeds
/// `limit` and is no longer decreasing.
pub fn convex_range(f: impl Fn(i64) -> i64, limit: i64) -> Vec<i64> {
    let mut out = Vec::new();
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        loop {
            let v = f(n);
            if v <= limit {
                out.push(n);
            } else if f(n + dir) >= v {
                break;
            }
            n += dir;
        }
    }
    out.sort_unstable();
    out
}

/// How `j(x; q^k)` is expanded.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ThetaMethod {
    /// Bilateral sum `sum (-1)^n q^{k n(n-1)/2} x^n`.
    Sum,
    /// Triple product `(x, q^k/x, q^k; q^k)_inf`.
    Product,
}

/// `j(x; q^k)` by the chosen method.
pub fn jtheta_by<E: ZEval>(e: &E, x: &Monomial, k: i64, order: i64, method: ThetaMethod) -> Result<E::Value> {
    if k < 1 {
        return Err(SeriesError::InvalidArgument(format!("theta base q^{k}")));
    }
    match method {
        ThetaMethod::Sum => {
            let deg = |n: i64| k * n * (n - 1) / 2 + x.qdeg * n;
            let terms = convex_range(deg, order)
                .into_iter()
                .map(|n| x.pow(n).shift_q(k * n * (n - 1) / 2).scale(&sign(n)));
            e.termsum(terms, order)
        }
        ThetaMethod::Product => BinomialProduct::new().theta(x, k).expand(e, order),
    }
}

/// `j(x; q^k)` via the bilateral sum.
pub fn jtheta<E: ZEval>(e: &E, x: &Monomial, k: i64, order: i64) -> Result<E::Value> {
    jtheta_by(e, x, k, order, ThetaMethod::Sum)
}

/// `(-1)^n` as a rational.
pub fn sign(n: i64) -> BigRational {
    BigRational::from_integer(if n.rem_euclid(2) == 0 { 1.into() } else { (-1).into() })
}

/// The numerator sum of `m(x, q^k, z)` before division by `j(z; q^k)`.
pub fn appell_sum<E: ZEval>(e: &E, x: &Monomial, k: i64, z: &Monomial, order: i64) -> Result<E::Value> {
    let xz = x.mul(z);
    let num = |r: i64| z.pow(r).shift_q(k * r * (r - 1) / 2).scale(&sign(r));
    let den = |r: i64| xz.shift_q(k * (r - 1));
    let lo = |r: i64| k * r * (r - 1) / 2 + z.qdeg * r + (-(den(r).qdeg)).max(0);
    let mut acc = e.zero(order)?;
    for r in convex_range(lo, order) {
        let t = e.monomial(&num(r), order)?;
        acc = acc.add(&e.div_one_minus(&t, &den(r))?);
    }
    Ok(acc)
}

/// Appell-Lerch sum `m(x, q^k, z)`.
pub fn appell_m<E: ZEval>(e: &E, x: &Monomial, k: i64, z: &Monomial, order: i64) -> Result<E::Value> {
    with_order(order, |n| {
        let s = appell_sum(e, x, k, z, n)?;
        let j = jtheta(e, z, k, n)?;
        Ok(s.mul(&j.inverse()?))
    })
}

/// Indefinite theta series `f_{a,b,c}(x, y, q^k)`:
/// `sum_{sg(r)=sg(s)} sg(r) (-1)^{r+s} x^r y^s q^{k(a r(r-1)/2 + b r s + c s(s-1)/2)}`.
pub fn f_abc<E: ZEval>(
    e: &E,
    (a, b, c): (i64, i64, i64),
    x: &Monomial,
    y: &Monomial,
    k: i64,
    order: i64,
) -> Result<E::Value> {
    if a < 1 || b < 1 || c < 1 || k < 1 {
        return Err(SeriesError::InvalidArgument(format!("f_{{{a},{b},{c}}} with base q^{k}")));
    }
    let expo = |r: i64, s: i64| k * (a * r * (r - 1) / 2 + b * r * s + c * s * (s - 1) / 2) + x.qdeg * r + y.qdeg * s;
    // with r, s of one sign the cross term only grows, so each row is bounded
    // below by its s-part minimum
    let mut terms = Vec::new();
    for quad in [1i64, -1] {
        let (r0, s0) = if quad == 1 { (0, 0) } else { (-1, -1) };
        let smin = {
            let g = |s: i64| k * c * s * (s - 1) / 2 + y.qdeg * s;
            let mut m = g(s0);
            let mut s = s0;
            loop {
                s += quad;
                let v = g(s);
                if v >= m && v > g(s - quad) {
                    break;
                }
                m = m.min(v);
            }
            m
        };
        let row_lo = |r: i64| k * a * r * (r - 1) / 2 + x.qdeg * r + smin;
        let mut r = r0;
        loop {
            let lo = row_lo(r);
            if lo > order && row_lo(r + quad) >= lo {
                break;
            }
            let mut s = s0;
            loop {
                let v = expo(r, s);
                if v > order && expo(r, s + quad) >= v {
                    break;
                }
                if v <= order {
                    let m = x.pow(r).mul(&y.pow(s)).shift_q(v - x.qdeg * r - y.qdeg * s).scale(&sign(r + s));
                    terms.push(if quad == 1 { m } else { m.neg() });
                }
                s += quad;
            }
            r += quad;
        }
    }
    e.termsum(terms, order)
}

/// `g_{a,b,c}(x, y, q^k, z1, z0)`: the theta-times-Appell-Lerch expansion of `f_{a,b,c}`.
#[allow(clippy::too_many_arguments)]
pub fn g_abc<E: ZEval>(
    e: &E,
    (a, b, c): (i64, i64, i64),
    x: &Monomial,
    y: &Monomial,
    k: i64,
    z1: &Monomial,
    z0: &Monomial,
    order: i64,
) -> Result<E::Value> {
    let d = b * b - a * c;
    if d <= 0 {
        return Err(SeriesError::InvalidArgument(format!("b^2 - ac = {d} must be positive")));
    }
    let mx = x.neg();
    let my = y.neg();
    with_order(order, |n| {
        let mut acc = e.zero(n)?;
        for t in 0..a {
            let pre = my.pow(t).shift_q(k * c * t * (t - 1) / 2);
            let th = jtheta(e, &x.shift_q(k * b * t), k * a, n)?;
            let arg = my.pow(a).div(&mx.pow(b)).shift_q(k * (a * b * (b + 1) / 2 - c * a * (a + 1) / 2 - t * d)).neg();
            let m = appell_m(e, &arg, k * a * d, z0, n)?;
            acc = acc.add(&e.mul_monomial(&th.mul(&m), &pre)?);
        }
        for t in 0..c {
            let pre = mx.pow(t).shift_q(k * a * t * (t - 1) / 2);
            let th = jtheta(e, &y.shift_q(k * b * t), k * c, n)?;
            let arg = mx.pow(c).div(&my.pow(b)).shift_q(k * (c * b * (b + 1) / 2 - a * c * (c + 1) / 2 - t * d)).neg();
            let m = appell_m(e, &arg, k * a * d, z1, n)?;
            acc = acc.add(&e.mul_monomial(&th.mul(&m), &pre)?);
        }
        Ok(acc)
    })
}

fn jt<E: ZEval>(e: &E, coeff: i64, xe: i64, ye: i64, qe: i64, x: &Monomial, y: &Monomial, k: i64, n: i64) -> Result<E::Value> {
    let arg = x.pow(xe).mul(&y.pow(ye)).shift_q(qe).scale(&BigRational::from_integer(coeff.into()));
    jtheta(e, &arg, k, n)
}

fn eta<E: ZEval>(e: &E, factors: &[(i64, i64)], n: i64) -> Result<E::Value> {
    eta_value(e, &BigRational::from_integer(1.into()), 0, factors, n)
}

/// `Theta_{1,4}(x, y, q)` transcribed term by term, including the repeated
/// `j(y/x; q^24)` in numerator and denominator.
pub fn theta_1_4<E: ZEval>(e: &E, x: &Monomial, y: &Monomial, order: i64) -> Result<E::Value> {
    with_order(order, |n| {
        let j = |c, xe, ye, qe, base| jt(e, c, xe, ye, qe, x, y, base, n);
        let inv = |v: E::Value| v.inverse();
        let mono = |c: i64, xe: i64, ye: i64, qe: i64| x.pow(xe).mul(&y.pow(ye)).shift_q(qe).scale(&BigRational::from_integer(c.into()));

        let s1_pre = j(1, 2, 2, 22, 24)?
            .mul(&j(-1, -1, 1, 12, 24)?)
            .mul(&j(1, 1, 1, 5, 12)?)
            .mul(&eta(e, &[(12, -3), (48, -1)], n)?);
        let s1_a = j(-1, 2, 2, 10, 24)?.mul(&j(1, -2, 2, 12, 24)?).mul(&eta(e, &[(24, 2)], n)?);
        let s1_b = e.mul_monomial(
            &j(-1, 2, 2, 22, 24)?
                .mul(&j(1, -1, 1, 12, 24)?.mul(&j(1, -1, 1, 12, 24)?))
                .mul(&j(-1, -1, 1, 0, 24)?.mul(&j(-1, -1, 1, 0, 24)?))
                .mul(&eta(e, &[(24, -1)], n)?),
            &mono(1, 2, 0, 5),
        )?;
        let s1 = s1_pre.mul(&s1_a.add(&s1_b));

        let s2_pre = j(1, 2, 2, 10, 24)?
            .mul(&j(-1, -1, 1, 0, 24)?)
            .mul(&j(1, 1, 1, 11, 12)?)
            .mul(&eta(e, &[(12, -2)], n)?);
        let s2_a = e.mul_monomial(
            &j(-1, 2, 2, 10, 24)?.mul(&j(1, -2, 2, 12, 24)?).mul(&eta(e, &[(48, 1), (24, -1)], n)?),
            &mono(1, 0, -1, 2),
        )?;
        let j48 = j(1, -2, 2, 24, 48)?;
        let s2_b = e.mul_monomial(
            &j(-1, 2, 2, 22, 24)?.mul(&j48.mul(&j48)).mul(&eta(e, &[(48, -1)], n)?),
            &mono(1, 1, 0, 1),
        )?;
        let s2 = s2_pre.mul(&s2_a.add(&s2_b));

        let q4 = jtheta(e, &Monomial::q(4), 16, n)?;
        let q8 = e.mul_monomial(&jtheta(e, &Monomial::q(8), 16, n)?, &Monomial::q(1))?;
        let bracket = q4.mul(&s1).sub(&q8.mul(&s2));

        let jyx = j(1, -1, 1, 0, 24)?;
        let numer = e.mul_monomial(&jyx, &mono(-1, 1, 1, 1))?;
        let denom = jyx.mul(&j(-1, 4, 0, 10, 24)?).mul(&j(-1, 0, 4, 10, 24)?);
        Ok(numer.mul(&inv(denom)?).mul(&bracket))
    })
}

/// The relations among Appell-Lerch sums and indefinite theta series checked by [`hm_relation_sides`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum HmRelation {
    /// `m(x,q,z) = m(x,q,qz)`
    ZShift,
    /// `m(x,q,z) = x^-1 m(x^-1,q,z^-1)`
    Inversion,
    /// `m(qx,q,z) = 1 - x m(x,q,z)`
    XShiftUp,
    /// `m(x,q,z) = 1 - q^-1 x m(q^-1 x,q,z)`
    XShiftDown,
    /// `m(x,q,z) = x^-1 - x^-1 m(qx,q,z)`
    XShiftReciprocal,
    /// Change of the `z` parameter by a theta quotient.
    ChangeZ,
    /// Splitting `m(x,q,z)` into two sums in base `q^4`.
    BaseFour,
    /// `f_{1,2,1} = g_{1,2,1}`.
    F121,
    /// `f_{1,5,1} = g_{1,5,1} - Theta_{1,4}`.
    F151,
}

impl HmRelation {
    pub const ALL: [HmRelation; 9] = [
        Self::ZShift,
        Self::Inversion,
        Self::XShiftUp,
        Self::XShiftDown,
        Self::XShiftReciprocal,
        Self::ChangeZ,
        Self::BaseFour,
        Self::F121,
        Self::F151,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::ZShift => "m-z-shift",
            Self::Inversion => "m-inversion",
            Self::XShiftUp => "m-x-shift-up",
            Self::XShiftDown => "m-x-shift-down",
            Self::XShiftReciprocal => "m-x-shift-reciprocal",
            Self::ChangeZ => "m-change-z",
            Self::BaseFour => "m-base-four",
            Self::F121 => "f121-expansion",
            Self::F151 => "f151-expansion",
        }
    }
}

/// Arguments for one relation instance; unused fields are ignored.
#[derive(Clone, Debug)]
pub struct HmInstance {
    pub x: Monomial,
    pub y: Monomial,
    pub z: Monomial,
    pub z0: Monomial,
    pub z1: Monomial,
    /// The relation is read with `q` replaced by `q^base`.
    pub base: i64,
}

impl HmInstance {
    /// Instance for the Appell-Lerch relations in `x` and `z`.
    pub fn xz(x: Monomial, z: Monomial) -> Self {
        Self { x, y: Monomial::one(), z, z0: Monomial::one(), z1: Monomial::one(), base: 1 }
    }

    /// Instance for the change-of-`z` relation.
    pub fn xz0z1(x: Monomial, z0: Monomial, z1: Monomial) -> Self {
        Self { x, y: Monomial::one(), z: Monomial::one(), z0, z1, base: 1 }
    }

    /// Instance for the indefinite theta relations.
    pub fn xy(x: Monomial, y: Monomial) -> Self {
        Self { x, y, z: Monomial::one(), z0: Monomial::one(), z1: Monomial::one(), base: 1 }
    }

    pub fn with_base(mut self, base: i64) -> Self {
        self.base = base;
        self
    }
}

/// Both sides of a relation instance.
pub fn hm_relation_sides<E: ZEval>(e: &E, rel: HmRelation, inst: &HmInstance, order: i64) -> Result<(E::Value, E::Value)> {
    let k = inst.base;
    let HmInstance { x, y, z, z0, z1, .. } = inst;
    let q = Monomial::q(k);
    let m = |x: &Monomial, kk: i64, z: &Monomial| appell_m(e, x, kk, z, order);
    let one = || e.one(order);
    match rel {
        HmRelation::ZShift => Ok((m(x, k, z)?, m(x, k, &z.mul(&q))?)),
        HmRelation::Inversion => {
            let rhs = e.mul_monomial(&m(&x.inv(), k, &z.inv())?, &x.inv())?;
            Ok((m(x, k, z)?, rhs))
        }
        HmRelation::XShiftUp => {
            let rhs = one()?.sub(&e.mul_monomial(&m(x, k, z)?, x)?);
            Ok((m(&x.mul(&q), k, z)?, rhs))
        }
        HmRelation::XShiftDown => {
            let xd = x.div(&q);
            let rhs = one()?.sub(&e.mul_monomial(&m(&xd, k, z)?, &xd)?);
            Ok((m(x, k, z)?, rhs))
        }
        HmRelation::XShiftReciprocal => {
            let xi = x.inv();
            let rhs = e.monomial(&xi, order)?.sub(&e.mul_monomial(&m(&x.mul(&q), k, z)?, &xi)?);
            Ok((m(x, k, z)?, rhs))
        }
        HmRelation::ChangeZ => {
            let lhs = m(x, k, z1)?.sub(&m(x, k, z0)?);
            let rhs = with_order(order, |n| {
                let j = |w: &Monomial| jtheta(e, w, k, n);
                let num = j(&z1.div(z0))?.mul(&j(&x.mul(z0).mul(z1))?).mul(&eta(e, &[(k, 3)], n)?);
                let den = j(z0)?.mul(&j(z1)?).mul(&j(&x.mul(z0))?).mul(&j(&x.mul(z1))?);
                e.mul_monomial(&num.mul(&den.inverse()?), z0)
            })?;
            Ok((lhs, rhs))
        }
        HmRelation::BaseFour => {
            let x2 = x.pow(2);
            let z4 = z.pow(4);
            let t1 = m(&x2.mul(&q).neg(), 4 * k, &z4)?;
            let t2 = e.mul_monomial(&m(&x2.div(&q).neg(), 4 * k, &z4)?, &x.div(&q))?;
            let t3 = with_order(order, |n| {
                let num = jtheta(e, &x.mul(&z.pow(2)).neg(), k, n)?
                    .mul(&jtheta(e, &x.mul(&z.pow(3)).neg(), k, n)?)
                    .mul(&eta(e, &[(2 * k, 1), (4 * k, 1)], n)?);
                let den = jtheta(e, &x.mul(z), k, n)?
                    .mul(&jtheta(e, &z4, 4 * k, n)?)
                    .mul(&jtheta(e, &x2.mul(&z4).mul(&q).neg(), 2 * k, n)?);
                e.mul_monomial(&num.mul(&den.inverse()?), &x.inv())
            })?;
            Ok((m(x, k, z)?, t1.sub(&t2).sub(&t3)))
        }
        HmRelation::F121 => {
            let lhs = f_abc(e, (1, 2, 1), x, y, k, order)?;
            let rhs = g_abc(e, (1, 2, 1), x, y, k, &y.div(x), &x.div(y), order)?;
            Ok((lhs, rhs))
        }
        HmRelation::F151 => {
            if k != 1 {
                return Err(SeriesError::InvalidArgument("Theta_{1,4} is only built in base q".into()));
            }
            let lhs = f_abc(e, (1, 5, 1), x, y, k, order)?;
            let g = g_abc(e, (1, 5, 1), x, y, k, &y.div(x), &x.div(y), order)?;
            let th = theta_1_4(e, x, y, order)?;
            Ok((lhs, g.sub(&th)))
        }
    }
}

/// Checks a relation instance with rational arguments (no free `z`).
pub fn hm_relation_check(rel: HmRelation, inst: &HmInstance, order: i64) -> Result<Comparison> {
    let e = AtRational::int(1);
    let (l, r): (QSeries<BigRational>, QSeries<BigRational>) = hm_relation_sides(&e, rel, inst, order)?;
    Ok(l.compare(&r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::{Formal, Integral};
    use crate::ring::LaurentPoly;
    use num_bigint::BigInt;

    fn r(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn convex_scan() {
        assert_eq!(convex_range(|n| n * n, 4), vec![-2, -1, 0, 1, 2]);
        assert_eq!(convex_range(|n| n * (n - 1) / 2, 0), vec![0, 1]);
        assert!(convex_range(|n| n * n + 5, 4).is_empty());
    }

    #[test]
    fn theta_pins() {
        let t = jtheta(&Integral, &Monomial::q(1), 2, 9).unwrap();
        let expect = QSeries::from_terms([(0, 1), (1, -2), (4, 2), (9, -2)].map(|(e, c)| (e, BigInt::from(c))), 9);
        assert!(t.compare(&expect).is_match());
        assert!(jtheta(&Integral, &Monomial::q(1), 1, 20).unwrap().is_zero());
        let f = jtheta(&Formal, &Monomial::signed(-1, 2, 0), 2, 4).unwrap();
        assert_eq!(f.coeff(0), LaurentPoly::from_terms(vec![(0, r(1, 1)), (2, r(1, 1))]));
    }

    #[test]
    fn sum_and_product_agree() {
        for (x, k) in [
            (Monomial::q(1), 2),
            (Monomial::signed(-1, 0, 1), 3),
            (Monomial::signed(-1, 0, -1), 6),
            (Monomial::new(r(2, 3), 0, -2), 5),
        ] {
            let a = jtheta_by(&AtRational::int(1), &x, k, 40, ThetaMethod::Sum).unwrap();
            let b = jtheta_by(&AtRational::int(1), &x, k, 40, ThetaMethod::Product).unwrap();
            assert!(a.compare(&b).is_match(), "{x} base {k}");
        }
        let x = Monomial::signed(1, 1, 1);
        let a = jtheta_by(&Formal, &x, 2, 20, ThetaMethod::Sum).unwrap();
        let b = jtheta_by(&Formal, &x, 2, 20, ThetaMethod::Product).unwrap();
        assert!(a.compare(&b).is_match());
    }

    #[test]
    fn f121_low_terms() {
        let x = Monomial::q(1);
        let f = f_abc(&Integral, (1, 2, 1), &x, &x, 1, 1).unwrap();
        assert_eq!(f.coeff(0), BigInt::from(1));
        assert_eq!(f.coeff(1), BigInt::from(-2));
    }

    #[test]
    fn appell_relations_small() {
        let inst = HmInstance::xz(Monomial::q(3), Monomial::int(2));
        for rel in [HmRelation::ZShift, HmRelation::Inversion, HmRelation::XShiftUp] {
            let c = hm_relation_check(rel, &inst, 15).unwrap();
            assert!(c.is_match(), "{rel:?}: {c:?}");
        }
    }

    #[test]
    fn degenerate_theta_in_denominator() {
        // j(q; q) vanishes identically, so m(x, q, q) is a pole
        let err = appell_m(&AtRational::int(1), &Monomial::int(2), 1, &Monomial::q(1), 10);
        assert!(matches!(err, Err(SeriesError::ZeroDivisor { .. }) | Err(SeriesError::NonConvergent(_))));
    }
}
