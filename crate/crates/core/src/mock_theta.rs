//! Eulerian mock theta series, their `z`-analogs, and the generic
//! Hecke-Rogers and Appell-type sums they are compared against.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Result, SeriesError};
use crate::eval::{Integral, SeriesValue, ZEval};
use crate::monomial::Monomial;
use crate::products::geom_ratio;
use crate::ring::Coeff;
use crate::series::QSeries;
use crate::theta::convex_range;

pub use crate::combinatorics::humbert_series;

/// One factor applied to a running Eulerian term.
enum Factor {
    Mono(Monomial),
    /// `(1 - w)`
    OneMinus(Monomial),
    /// `1 / (1 - w)`
    OverOneMinus(Monomial),
}

fn apply<E: ZEval>(e: &E, v: E::Value, fs: &[Factor]) -> Result<E::Value> {
    let mut v = v;
    for f in fs {
        v = match f {
            Factor::Mono(m) => e.mul_monomial(&v, m)?,
            Factor::OneMinus(w) => e.mul_one_minus(&v, w)?,
            Factor::OverOneMinus(w) => e.div_one_minus(&v, w)?,
        };
    }
    Ok(v)
}

/// `1 + q^k` as a `(1 - w)` factor.
fn one_plus(k: i64) -> Factor {
    Factor::OneMinus(Monomial::signed(-1, 0, k))
}

fn over(zdeg: i64, qdeg: i64) -> Factor {
    Factor::OverOneMinus(Monomial::signed(1, zdeg, qdeg))
}

/// Sums `t_0 + t_1 + ...` where `t_{n+1} = t_n * step(n)`, stopping once the
/// leading exponent `lead(n)` of the next term exceeds `order`.
fn ratio_sum<E: ZEval>(
    e: &E,
    start: i64,
    first: &[Factor],
    step: impl Fn(i64) -> Vec<Factor>,
    lead: impl Fn(i64) -> i64,
    order: i64,
) -> Result<E::Value> {
    if lead(start) > order {
        return e.zero(order);
    }
    let mut term = apply(e, e.one(order)?, first)?;
    let mut acc = term.clone();
    let mut n = start;
    while lead(n + 1) <= order {
        term = apply(e, term, &step(n))?;
        acc = acc.add(&term);
        n += 1;
    }
    Ok(acc.truncate(order))
}

/// The univariate Eulerian series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Eulerian {
    A,
    V1,
    Sigma,
    PhiMinus,
}

impl Eulerian {
    pub const ALL: [Eulerian; 4] = [Eulerian::A, Eulerian::V1, Eulerian::Sigma, Eulerian::PhiMinus];

    pub fn name(self) -> &'static str {
        match self {
            Eulerian::A => "A",
            Eulerian::V1 => "V1",
            Eulerian::Sigma => "sigma",
            Eulerian::PhiMinus => "phi-",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|w| w.name() == s || (s == "phi_minus" && *w == Eulerian::PhiMinus))
    }
}

/// An Eulerian series in any evaluation mode.
pub fn eulerian_value<E: ZEval>(e: &E, which: Eulerian, order: i64) -> Result<E::Value> {
    let q = Monomial::q;
    match which {
        Eulerian::A => ratio_sum(
            e,
            0,
            &[Factor::Mono(q(1)), over(0, 1), over(0, 1)],
            |n| vec![Factor::Mono(q(2 * n + 3)), one_plus(2 * n + 1), over(0, 2 * n + 3), over(0, 2 * n + 3)],
            |n| (n + 1) * (n + 1),
            order,
        ),
        Eulerian::V1 => ratio_sum(
            e,
            0,
            &[Factor::Mono(q(1)), over(0, 1)],
            |n| vec![Factor::Mono(q(2 * n + 3)), one_plus(2 * n + 1), over(0, 2 * n + 3)],
            |n| (n + 1) * (n + 1),
            order,
        ),
        Eulerian::Sigma => ratio_sum(
            e,
            0,
            &[Factor::Mono(q(1)), over(0, 1)],
            |n| vec![Factor::Mono(q(n + 2)), one_plus(n + 1), over(0, 2 * n + 3)],
            |n| (n + 1) * (n + 2) / 2,
            order,
        ),
        Eulerian::PhiMinus => ratio_sum(
            e,
            1,
            &[Factor::Mono(q(1)), one_plus(1), over(0, 1)],
            |n| vec![Factor::Mono(q(1)), one_plus(2 * n), one_plus(2 * n + 1), over(0, 2 * n + 1)],
            |n| n,
            order,
        ),
    }
}

/// An Eulerian series with integer coefficients.
pub fn eulerian(which: Eulerian, order: i64) -> QSeries<BigInt> {
    eulerian_value(&Integral, which, order).expect("Eulerian series have unit denominators")
}

/// `F_8(z, q)` in any evaluation mode.
pub fn f8_value<E: ZEval>(e: &E, order: i64) -> Result<E::Value> {
    ratio_sum(
        e,
        0,
        &[Factor::Mono(Monomial::q(1)), over(1, 1), over(-1, 1)],
        |n| {
            vec![
                Factor::Mono(Monomial::signed(-1, 0, 2 * n + 3)),
                Factor::OneMinus(Monomial::q(2 * n + 1)),
                over(1, 2 * n + 3),
                over(-1, 2 * n + 3),
            ]
        },
        |n| (n + 1) * (n + 1),
        order,
    )
}

/// `F_4(z, q)` in any evaluation mode.
pub fn f4_value<E: ZEval>(e: &E, order: i64) -> Result<E::Value> {
    ratio_sum(
        e,
        0,
        &[Factor::Mono(Monomial::q(1)), over(1, 1), over(-1, 1)],
        |n| {
            vec![
                Factor::Mono(Monomial::signed(-1, 0, 1)),
                Factor::OneMinus(Monomial::q(2 * n + 1)),
                one_plus(2 * n + 2),
                over(1, 2 * n + 3),
                over(-1, 2 * n + 3),
            ]
        },
        |n| n + 1,
        order,
    )
}

/// `(-4/n)`.
pub fn kronecker_minus4(n: i64) -> i64 {
    match n.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// `sg(n)`: `1` for `n >= 0`, `-1` otherwise.
pub fn sg(n: i64) -> i64 {
    if n >= 0 {
        1
    } else {
        -1
    }
}

fn parity(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Summation region of an indefinite theta sum over `(n, j)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Region {
    /// `1 <= j <= |n|`, `n != 0`
    JinN,
    /// `1 - |n| <= j <= |n|`, `n != 0`
    Sym,
    /// `n >= 1`, `1 <= j <= n`
    PosQuad,
}

impl Region {
    fn j_range(self, n: i64) -> std::ops::RangeInclusive<i64> {
        match self {
            Region::JinN => 1..=n.abs(),
            Region::Sym => 1 - n.abs()..=n.abs(),
            Region::PosQuad if n >= 1 => 1..=n,
            Region::PosQuad => 1..=0,
        }
    }
}

/// A sign factor in an indefinite theta sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignFactor {
    Sg,
    /// `(-1)^{n-1}`
    NMinusOne,
    /// `(-1)^{j-1}`
    JMinusOne,
    /// `(-1)^{n-1+j(j-1)/2}`
    NPlusTriangularJ,
    /// `(-4/n)`
    KroneckerN,
}

impl SignFactor {
    fn eval(self, n: i64, j: i64) -> i64 {
        match self {
            SignFactor::Sg => sg(n),
            SignFactor::NMinusOne => parity(n - 1),
            SignFactor::JMinusOne => parity(j - 1),
            SignFactor::NPlusTriangularJ => parity(n - 1 + j * (j - 1) / 2),
            SignFactor::KroneckerN => kronecker_minus4(n),
        }
    }
}

/// The `z`-dependent factor of a bivariate indefinite theta sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZPart {
    None,
    /// `(z^{1-j} - z^j) / (1 - z)`
    GeomJ,
    /// `(z^n - z^{-n}) / (1 - z)`
    GeomN,
}

/// `sum_{region} signs * weight(n, j) * q^{Q(n, j)} * zpart`.
///
/// `Q(n, j) = (q_nn n^2 + q_nj n j + q_jj j^2 + q_n n + q_j j + q_0) / den`,
/// which must be integral on the region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeRogersSpec {
    pub region: Region,
    /// `[q_nn, q_nj, q_jj, q_n, q_j, q_0]`
    pub quad: [i64; 6],
    pub den: i64,
    pub signs: Vec<SignFactor>,
    /// `w0 + wn n + wj j`
    pub weight: [i64; 3],
    pub zpart: ZPart,
}

impl HeckeRogersSpec {
    pub fn new(region: Region, quad: [i64; 6], den: i64) -> Self {
        Self { region, quad, den, signs: Vec::new(), weight: [1, 0, 0], zpart: ZPart::None }
    }

    pub fn sign(mut self, s: SignFactor) -> Self {
        self.signs.push(s);
        self
    }

    pub fn weight(mut self, w0: i64, wn: i64, wj: i64) -> Self {
        self.weight = [w0, wn, wj];
        self
    }

    pub fn zpart(mut self, z: ZPart) -> Self {
        self.zpart = z;
        self
    }

    fn exponent(&self, n: i64, j: i64) -> Result<i64> {
        let [a, b, c, d, e, f] = self.quad;
        let num = a * n * n + b * n * j + c * j * j + d * n + e * j + f;
        if num % self.den != 0 {
            return Err(SeriesError::NonIntegral(format!("exponent {num}/{} at n={n}, j={j}", self.den)));
        }
        Ok(num / self.den)
    }

    fn coefficient(&self, n: i64, j: i64) -> i64 {
        let s: i64 = self.signs.iter().map(|f| f.eval(n, j)).product();
        s * (self.weight[0] + self.weight[1] * n + self.weight[2] * j)
    }

    /// Evaluates the truncated sum in any mode.
    pub fn evaluate<E: ZEval>(&self, e: &E, order: i64) -> Result<E::Value> {
        const QUIET_SHELLS: u32 = 2;
        let guard = 4 * order.max(1) + 64;
        let mut terms = Vec::new();
        let mut quiet = 0;
        let mut t = 1i64;
        while quiet < QUIET_SHELLS {
            if t > guard {
                return Err(SeriesError::NonConvergent(format!("exponent unbounded below past |n| = {guard}")));
            }
            let mut shell_min = i64::MAX;
            for n in [t, -t] {
                for j in self.region.j_range(n) {
                    let ex = self.exponent(n, j)?;
                    shell_min = shell_min.min(ex);
                    if ex > order {
                        continue;
                    }
                    let c = self.coefficient(n, j);
                    if c == 0 {
                        continue;
                    }
                    let zpoly = match self.zpart {
                        ZPart::None => None,
                        ZPart::GeomJ => Some(geom_ratio(1 - j, j)),
                        ZPart::GeomN => Some(geom_ratio(n, -n)),
                    };
                    match zpoly {
                        None => terms.push(Monomial::new(BigRational::from_i64(c), 0, ex)),
                        Some(p) => {
                            for (zd, zc) in p.terms() {
                                let coeff = zc * BigRational::from_i64(c);
                                terms.push(Monomial::new(coeff, *zd, ex));
                            }
                        }
                    }
                }
            }
            // an empty shell (PosQuad at n < 0 only) still counts as quiet
            quiet = if shell_min > order { quiet + 1 } else { 0 };
            t += 1;
        }
        e.termsum(terms, order)
    }
}

/// Range of the summation index of an Appell-type sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KRange {
    All,
    Positive,
}

/// `sum_k sign * w(k) q^{a k^2 + b k + c} / (1 + s q^{d k + e}) * zpart(k)`,
/// with `sign = (-1)^{k-1}` when `alternating`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppellRhsSpec {
    /// `[a, b, c]`
    pub exponent: [i64; 3],
    /// `w0 + w1 k`
    pub weight: [i64; 2],
    pub alternating: bool,
    /// `s` in `1 + s q^{d k + e}`
    pub s: i64,
    /// `[d, e]`
    pub denom: [i64; 2],
    pub range: KRange,
    /// `(z^{p1 k + p0} - z^{r1 k + r0}) / (1 - z)` as `[p1, p0, r1, r0]`
    pub zpart: Option<[i64; 4]>,
}

impl AppellRhsSpec {
    pub fn new(exponent: [i64; 3], s: i64, denom: [i64; 2]) -> Self {
        Self { exponent, weight: [1, 0], alternating: true, s, denom, range: KRange::All, zpart: None }
    }

    pub fn weight(mut self, w0: i64, w1: i64) -> Self {
        self.weight = [w0, w1];
        self
    }

    pub fn range(mut self, r: KRange) -> Self {
        self.range = r;
        self
    }

    pub fn zpart(mut self, z: [i64; 4]) -> Self {
        self.zpart = Some(z);
        self
    }

    pub fn non_alternating(mut self) -> Self {
        self.alternating = false;
        self
    }

    /// Evaluates the truncated sum in any mode.
    pub fn evaluate<E: ZEval>(&self, e: &E, order: i64) -> Result<E::Value> {
        let [a, b, c] = self.exponent;
        let [d, e0] = self.denom;
        if a <= 0 || d == 0 || self.s.abs() != 1 {
            return Err(SeriesError::InvalidArgument(format!("Appell sum needs a > 0, d != 0, s = +-1: {self:?}")));
        }
        let ex = |k: i64| a * k * k + b * k + c;
        let lo = |k: i64| ex(k) + (-(d * k + e0)).max(0);
        let mut acc = e.zero(order)?;
        for k in convex_range(lo, order) {
            if self.range == KRange::Positive && k < 1 {
                continue;
            }
            let w = self.weight[0] + self.weight[1] * k;
            let sgn = if self.alternating { parity(k - 1) } else { 1 };
            if w == 0 {
                continue;
            }
            let base = Monomial::new(BigRational::from_i64(sgn * w), 0, ex(k));
            let num = match self.zpart {
                None => e.monomial(&base, order)?,
                Some([p1, p0, r1, r0]) => {
                    let poly = geom_ratio(p1 * k + p0, r1 * k + r0);
                    let terms = poly.terms().iter().map(|(zd, zc)| Monomial::new(zc.clone(), *zd, 0).mul(&base)).collect::<Vec<_>>();
                    e.termsum(terms, order)?
                }
            };
            let den = Monomial::signed(-self.s, 0, d * k + e0);
            acc = acc.add(&e.div_one_minus(&num, &den)?);
        }
        Ok(acc.truncate(order))
    }
}

/// `C_n = sum_k q^{(2k-n)(2k+1-n)/2}`.
pub fn c_n(n: i64, order: i64) -> QSeries<BigInt> {
    let ex = |k: i64| (2 * k - n) * (2 * k + 1 - n) / 2;
    let terms = convex_range(ex, order).into_iter().map(|k| (ex(k), BigInt::from(1)));
    let mut acc = QSeries::<BigInt>::zero(order);
    for (x, v) in terms {
        acc = acc.add(&QSeries::monomial(v, x, order));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class_numbers::genfun_f;
    use crate::eval::{AtRational, Formal};
    use crate::products::eta_quotient;

    fn ints(v: &[i64]) -> QSeries<BigInt> {
        QSeries::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn eulerian_pins() {
        assert!(eulerian(Eulerian::A, 3).compare(&ints(&[0, 1, 2, 3])).is_match());
        // phi- term n starts at q^n
        let p = eulerian(Eulerian::PhiMinus, 2);
        assert!(p.compare(&ints(&[0, 1, 3])).is_match());
        assert_eq!(eulerian(Eulerian::V1, 0), QSeries::zero(0));
    }

    #[test]
    fn eulerian_terms_match_direct_products() {
        // sigma through n = 2 by explicit products, checked to order 9 (n = 3 enters at q^10)
        let e = Integral;
        let mut direct = QSeries::<BigInt>::zero(9);
        for n in 0..3i64 {
            let mut t = e.monomial(&Monomial::q((n + 1) * (n + 2) / 2), 9).unwrap();
            for k in 1..=n {
                t = e.mul_one_minus(&t, &Monomial::signed(-1, 0, k)).unwrap();
            }
            for k in 0..=n {
                t = e.div_one_minus(&t, &Monomial::q(2 * k + 1)).unwrap();
            }
            direct = direct.add(&t);
        }
        assert!(eulerian(Eulerian::Sigma, 9).compare(&direct).is_match());
    }

    #[test]
    fn kronecker_pins() {
        assert_eq!(kronecker_minus4(2), 0);
        assert_eq!(kronecker_minus4(5), 1);
        assert_eq!(kronecker_minus4(7), -1);
        assert_eq!(kronecker_minus4(-1), -1);
    }

    #[test]
    fn f8_at_one_is_class_number_series() {
        let f = f8_value(&AtRational::int(1), 20).unwrap();
        let h = crate::products::to_rational(&genfun_f(8, -1, 20).unwrap());
        assert!(f.compare(&h).is_match());
    }

    #[test]
    fn f8_hecke_rogers_low_terms() {
        let spec = HeckeRogersSpec::new(Region::JinN, [2, 0, -1, -1, 1, 0], 1)
            .sign(SignFactor::Sg)
            .sign(SignFactor::JMinusOne)
            .weight(-1, 0, 2);
        let rhs = spec.evaluate(&Integral, 4).unwrap();
        assert!(rhs.compare(&ints(&[0, 1, 0, -1, -3])).is_match());
        let lhs = eta_quotient(1, 0, &[(1, 2), (2, -1)], 4).mul(&genfun_f(8, -1, 4).unwrap());
        assert!(lhs.compare(&rhs).is_match());
    }

    #[test]
    fn geom_j_at_j_one_is_exact() {
        // a single (n, j) = (1, 1) term carries geom_ratio(0, 1) = 1
        let spec = HeckeRogersSpec::new(Region::JinN, [2, 0, -1, -1, 1, 0], 1)
            .sign(SignFactor::Sg)
            .zpart(ZPart::GeomJ);
        let s = spec.evaluate(&Formal, 1).unwrap();
        assert_eq!(s.coeff(1), crate::ring::LaurentPoly::ring_one());
    }

    #[test]
    fn unbounded_exponent_is_reported() {
        let spec = HeckeRogersSpec::new(Region::Sym, [-1, 0, 0, 0, 0, 0], 1);
        assert!(matches!(spec.evaluate(&Integral, 5), Err(SeriesError::NonConvergent(_))));
    }

    #[test]
    fn appell_first_term() {
        let spec = AppellRhsSpec::new([1, 0, 0], 1, [1, 0]).range(KRange::Positive).non_alternating();
        // q/(1+q) + q^4/(1+q^2) + ...
        let s = spec.evaluate(&Integral, 3).unwrap();
        assert!(s.compare(&ints(&[0, 1, -1, 1])).is_match());
    }

    #[test]
    fn appell_pole() {
        let spec = AppellRhsSpec::new([1, 0, 0], -1, [1, 0]);
        assert!(matches!(spec.evaluate(&Integral, 3), Err(SeriesError::Pole(_))));
    }

    #[test]
    fn c_n_is_constant() {
        let want = eta_quotient(1, 0, &[(2, 2), (1, -1)], 30);
        for n in 0..6 {
            assert!(c_n(n, 30).compare(&want).is_match(), "n = {n}");
        }
    }
}
