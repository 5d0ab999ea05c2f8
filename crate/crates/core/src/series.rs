//! Truncated Laurent series in `q`.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Result, SeriesError};
use crate::ring::Coeff;

/// A Laurent series in `q` known exactly for every exponent up to `order`.
///
/// Coefficients are stored densely for exponents `min_exp..=order`; everything
/// below `min_exp` is zero and everything above `order` is unknown.  The empty
/// series (`order == min_exp - 1`) is a legitimate value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries<R> {
    min_exp: i64,
    order: i64,
    coeffs: Vec<R>,
}

/// Outcome of comparing two series through their common certified order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Comparison {
    pub certified_order: i64,
    /// First exponent where the two sides differ, with both coefficients rendered.
    pub first_mismatch: Option<(i64, String, String)>,
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl<R: Coeff> QSeries<R> {
    pub fn new(min_exp: i64, order: i64, coeffs: Vec<R>) -> Result<Self> {
        if order < min_exp - 1 || coeffs.len() as i64 != order - min_exp + 1 {
            return Err(SeriesError::InvalidArgument(format!(
                "{} coefficients do not fill exponents {min_exp}..={order}",
                coeffs.len()
            )));
        }
        Ok(Self { min_exp, order, coeffs })
    }

    /// The series that is zero through `order`.
    pub fn zero(order: i64) -> Self {
        Self { min_exp: order + 1, order, coeffs: Vec::new() }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(R::ring_one(), 0, order)
    }

    /// `c * q^exp`, truncated at `order`.
    pub fn monomial(c: R, exp: i64, order: i64) -> Self {
        if exp > order || c.is_ring_zero() {
            return Self::zero(order);
        }
        let mut coeffs = vec![R::ring_zero(); (order - exp + 1) as usize];
        coeffs[0] = c;
        Self { min_exp: exp, order, coeffs }
    }

    /// Sums `(exponent, coefficient)` terms; terms above `order` are dropped.
    ///
    /// The caller is responsible for supplying every term at or below `order`.
    pub fn from_terms<I>(terms: I, order: i64) -> Self
    where
        I: IntoIterator<Item = (i64, R)>,
    {
        let kept: Vec<(i64, R)> = terms.into_iter().filter(|t| t.0 <= order).collect();
        let Some(lo) = kept.iter().map(|t| t.0).min() else {
            return Self::zero(order);
        };
        let mut coeffs = vec![R::ring_zero(); (order - lo + 1) as usize];
        for (e, c) in kept {
            coeffs[(e - lo) as usize].add_assign_ref(&c);
        }
        Self { min_exp: lo, order, coeffs }.normalized()
    }

    /// Dense constructor for power series `c[0] + c[1] q + ...`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let order = coeffs.len() as i64 - 1;
        Self { min_exp: 0, order, coeffs }
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `q^e`; zero below `min_exp`.
    ///
    /// # Panics
    /// If `e` lies beyond the certified order.
    pub fn coeff(&self, e: i64) -> R {
        assert!(e <= self.order, "coefficient of q^{e} requested beyond order {}", self.order);
        if e < self.min_exp {
            R::ring_zero()
        } else {
            self.coeffs[(e - self.min_exp) as usize].clone()
        }
    }

    pub fn get(&self, e: i64) -> Option<&R> {
        if e < self.min_exp || e > self.order {
            None
        } else {
            Some(&self.coeffs[(e - self.min_exp) as usize])
        }
    }

    /// Exponent of the lowest nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_ring_zero()).map(|i| self.min_exp + i as i64)
    }

    /// Lower bound on the support: the valuation, or `order + 1` when the series vanishes.
    pub fn lower_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.order + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drops leading zero coefficients so `min_exp` equals the valuation.
    pub fn normalized(mut self) -> Self {
        let skip = self.coeffs.iter().take_while(|c| c.is_ring_zero()).count();
        if skip > 0 {
            self.coeffs.drain(..skip);
            self.min_exp += skip as i64;
        }
        self
    }

    /// Forgets every coefficient above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        if order < self.min_exp {
            return Self::zero(order);
        }
        let keep = (order - self.min_exp + 1) as usize;
        Self { min_exp: self.min_exp, order, coeffs: self.coeffs[..keep].to_vec() }
    }

    /// Iterates `(exponent, coefficient)` over the nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_ring_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> QSeries<S> {
        QSeries { min_exp: self.min_exp, order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> Result<S>) -> Result<QSeries<S>> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(QSeries { min_exp: self.min_exp, order: self.order, coeffs })
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let order = self.order.min(other.order);
        let lo = self.min_exp.min(other.min_exp);
        if lo > order {
            return Self::zero(order);
        }
        let mut coeffs = vec![R::ring_zero(); (order - lo + 1) as usize];
        for (e, c) in self.terms().take_while(|t| t.0 <= order) {
            coeffs[(e - lo) as usize].add_assign_ref(c);
        }
        for (e, c) in other.terms().take_while(|t| t.0 <= order) {
            let slot = &mut coeffs[(e - lo) as usize];
            if negate {
                slot.sub_assign_ref(c);
            } else {
                slot.add_assign_ref(c);
            }
        }
        Self { min_exp: lo, order, coeffs }.normalized()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_ring_zero() {
            return Self::zero(self.order);
        }
        self.map_coeffs(|x| x.mul_ref(c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { min_exp: self.min_exp + k, order: self.order + k, coeffs: self.coeffs.clone() }
    }

    /// Product with the tightest order the factors certify.
    pub fn mul(&self, other: &Self) -> Self {
        let va = self.lower_bound();
        let vb = other.lower_bound();
        let order = (self.order + vb).min(other.order + va);
        if va + vb > order {
            return Self::zero(order);
        }
        let lo = va + vb;
        let mut coeffs = vec![R::ring_zero(); (order - lo + 1) as usize];
        let bt: Vec<(i64, &R)> = other.terms().collect();
        for (ea, ca) in self.terms() {
            if ea + vb > order {
                break;
            }
            for &(eb, cb) in &bt {
                let e = ea + eb;
                if e > order {
                    break;
                }
                coeffs[(e - lo) as usize].add_mul(ca, cb);
            }
        }
        Self { min_exp: lo, order, coeffs }.normalized()
    }

    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one(self.order);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse.
    ///
    /// The lowest nonzero coefficient must be a unit; the result starts at
    /// `-valuation` and is certified to `order - 2 * valuation`.
    pub fn inverse(&self) -> Result<Self> {
        let v = self.valuation().ok_or(SeriesError::ZeroDivisor { order: self.order })?;
        let a = &self.coeffs[(v - self.min_exp) as usize..];
        let lead_inv = a[0].unit_inverse().ok_or_else(|| SeriesError::NonUnit {
            ring: R::NAME,
            exp: v,
            coeff: a[0].to_string(),
        })?;
        let len = a.len();
        let neg_inv = lead_inv.neg_ref();
        let mut g: Vec<R> = Vec::with_capacity(len);
        g.push(lead_inv);
        for k in 1..len {
            let mut s = R::ring_zero();
            for i in 1..=k {
                if !a[i].is_ring_zero() {
                    s.add_mul(&a[i], &g[k - i]);
                }
            }
            g.push(s.mul_ref(&neg_inv));
        }
        Ok(Self { min_exp: -v, order: self.order - 2 * v, coeffs: g })
    }

    /// Divides by `1 - w q^d` for `d > 0` via the recurrence `g_e = f_e + w g_{e-d}`.
    pub fn div_one_minus(&self, w: &R, d: i64) -> Self {
        assert!(d > 0, "geometric expansion needs a positive q-degree");
        let mut coeffs = self.coeffs.clone();
        let d = d as usize;
        for i in d..coeffs.len() {
            let (head, tail) = coeffs.split_at_mut(i);
            if !head[i - d].is_ring_zero() {
                tail[0].add_mul(w, &head[i - d]);
            }
        }
        Self { min_exp: self.min_exp, order: self.order, coeffs }
    }

    /// Multiplies by the exact binomial `1 - w q^d` (any sign of `d`).
    pub fn mul_one_minus(&self, w: &R, d: i64) -> Self {
        if w.is_ring_zero() {
            return self.clone();
        }
        let order = self.order.min(self.order + d);
        let lo = self.min_exp.min(self.min_exp + d);
        if lo > order {
            return Self::zero(order);
        }
        let mut coeffs = vec![R::ring_zero(); (order - lo + 1) as usize];
        let neg_w = w.neg_ref();
        for (e, c) in self.terms() {
            if e <= order {
                coeffs[(e - lo) as usize].add_assign_ref(c);
            }
            let e2 = e + d;
            if e2 <= order {
                coeffs[(e2 - lo) as usize].add_mul(&neg_w, c);
            }
        }
        Self { min_exp: lo, order, coeffs }.normalized()
    }

    /// Substitutes `q -> -q`.
    pub fn neg_q(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (self.min_exp + i as i64).rem_euclid(2) == 1 { c.neg_ref() } else { c.clone() })
            .collect();
        Self { min_exp: self.min_exp, order: self.order, coeffs }
    }

    /// Substitutes `q -> q^k` for `k >= 1`.
    pub fn subs_q_power(&self, k: i64) -> Self {
        assert!(k >= 1, "q-power substitution needs k >= 1");
        let order = self.order * k + (k - 1);
        let terms: Vec<(i64, R)> = self.terms().map(|(e, c)| (e * k, c.clone())).collect();
        let mut out = Self::from_terms(terms, order);
        if out.is_zero() {
            out = Self::zero(order);
        }
        out
    }

    /// Atkin's `U_p`: keeps the coefficients of `q^{pn}` as the coefficients of `q^n`.
    pub fn u_p(&self, p: i64) -> Self {
        assert!(p >= 1, "U_p needs p >= 1");
        let order = self.order.div_euclid(p);
        let terms: Vec<(i64, R)> = self
            .terms()
            .filter(|(e, _)| e.rem_euclid(p) == 0)
            .map(|(e, c)| (e.div_euclid(p), c.clone()))
            .collect();
        Self::from_terms(terms, order)
    }

    /// `p`-dissection: components `f_i` with `f(q) = sum_i q^i f_i(q^p)`.
    pub fn dissect(&self, p: i64) -> Vec<Self> {
        assert!(p >= 1, "dissection needs p >= 1");
        (0..p).map(|i| self.shift(-i).u_p(p)).collect()
    }

    /// Compares coefficients through the common order.
    pub fn compare(&self, other: &Self) -> Comparison {
        let order = self.order.min(other.order);
        let lo = self.min_exp.min(other.min_exp);
        for e in lo..=order {
            let a = self.coeff(e);
            let b = other.coeff(e);
            if a != b {
                return Comparison { certified_order: e - 1, first_mismatch: Some((e, a.to_string(), b.to_string())) };
            }
        }
        Comparison { certified_order: order, first_mismatch: None }
    }

    /// `{min_exp, order, coeffs: [...]}` with exact string coefficients.
    pub fn to_json(&self) -> Value {
        json!({
            "min_exp": self.min_exp,
            "order": self.order,
            "coeffs": self.coeffs.iter().map(Coeff::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| v.get(k).ok_or_else(|| SeriesError::Json(format!("missing field {k:?}")));
        let min_exp = field("min_exp")?.as_i64().ok_or_else(|| SeriesError::Json("min_exp must be an integer".into()))?;
        let order = field("order")?.as_i64().ok_or_else(|| SeriesError::Json("order must be an integer".into()))?;
        let coeffs = field("coeffs")?
            .as_array()
            .ok_or_else(|| SeriesError::Json("coeffs must be an array".into()))?
            .iter()
            .map(R::from_json)
            .collect::<Result<Vec<_>>>()?;
        Self::new(min_exp, order, coeffs).map_err(|e| SeriesError::Json(e.to_string()))
    }
}

impl<R: Coeff> fmt::Display for QSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let s = c.to_string();
            let s = if s.contains(' ') || s.contains('+') && !s.starts_with('(') { format!("({s})") } else { s };
            match e {
                0 => write!(f, "{s}")?,
                1 => write!(f, "{s}*q")?,
                _ => write!(f, "{s}*q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}
