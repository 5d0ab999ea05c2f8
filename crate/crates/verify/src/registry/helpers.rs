use num_bigint::BigInt;
use num_rational::BigRational;

use hurwitz_core::class_numbers::genfun_f;
use hurwitz_core::products::{eta_quotient, to_rational};
use hurwitz_core::{with_order, AtRational, Jet1, QSeries, Result};

use crate::outcome::{compare, Outcome};

/// Rational points at which numeric-`z` cases are evaluated, as `(p, q)` for `p/q`.
pub const WITNESSES: [(i64, i64); 5] = [(2, 1), (3, 1), (-2, 1), (1, 2), (-1, 3)];

pub type IntSeries = QSeries<BigInt>;
pub type RatSeries = QSeries<BigRational>;

pub fn rat(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

/// `c q^shift prod J_k^e`.
pub fn eta(c: i64, shift: i64, factors: &[(i64, i64)], order: i64) -> IntSeries {
    eta_quotient(c, shift, factors, order)
}

/// `(p/d) q^shift prod J_k^e` with rational coefficients.
pub fn eta_r(p: i64, d: i64, shift: i64, factors: &[(i64, i64)], order: i64) -> RatSeries {
    to_rational(&eta_quotient(1, shift, factors, order)).scale(&rat(p, d))
}

pub fn f_series(a: i64, b: i64, order: i64) -> Result<IntSeries> {
    genfun_f(a, b, order)
}

/// Runs a two-sided rational check at every witness `z`.
pub fn at_witnesses<F>(order: i64, sides: F) -> Result<Outcome>
where
    F: Fn(&AtRational, i64) -> Result<(RatSeries, RatSeries)>,
{
    let mut out = Vec::new();
    for (p, d) in WITNESSES {
        let e = AtRational(rat(p, d));
        let (l, r) = sides(&e, order)?;
        out.push(compare(&l, &r).at(format!("z = {}", e.0)));
    }
    Ok(Outcome::all(out))
}

/// `d/dz` at `z = 1` of the jet built by `build`, certified through `order`.
pub fn derivative<F>(order: i64, build: F) -> Result<RatSeries>
where
    F: Fn(i64) -> Result<Jet1>,
{
    Ok(with_order(order, build)?.f1)
}

/// Compares an integer series with a rational one.
pub fn compare_ir(lhs: &IntSeries, rhs: &RatSeries) -> Outcome {
    compare(&to_rational(lhs), rhs)
}
