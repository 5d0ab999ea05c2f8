use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use super::{parse_rational, rat_add, rat_mul, rat_to_string, Coeff, Gaussian};
use crate::error::{Result, SeriesError};

/// Finitely supported Laurent polynomial in `z` with rational coefficients.
///
/// Terms are kept sorted by exponent and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigRational)>,
}

impl LaurentPoly {
    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * z^k`.
    pub fn monomial(c: BigRational, k: i64) -> Self {
        if c.is_zero() {
            Self::default()
        } else {
            Self { terms: vec![(k, c)] }
        }
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms(mut raw: Vec<(i64, BigRational)>) -> Self {
        raw.sort_by_key(|t| t.0);
        let mut terms: Vec<(i64, BigRational)> = Vec::with_capacity(raw.len());
        for (k, c) in raw {
            match terms.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = rat_add(lc, &c),
                _ => terms.push((k, c)),
            }
        }
        terms.retain(|t| !t.1.is_zero());
        Self { terms }
    }

    pub fn terms(&self) -> &[(i64, BigRational)] {
        &self.terms
    }

    /// Coefficient of `z^k`.
    pub fn coeff(&self, k: i64) -> BigRational {
        self.terms
            .binary_search_by_key(&k, |t| t.0)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// Value at `z = 1`.
    pub fn at_one(&self) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, t| rat_add(&acc, &t.1))
    }

    /// Exact value at a nonzero rational point.
    pub fn eval_rational(&self, z0: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (k, c)| {
            rat_add(&acc, &rat_mul(c, &super::rat_pow(z0, *k)))
        })
    }

    /// Exact value at a nonzero Gaussian rational point.
    pub fn eval_gaussian(&self, z0: &Gaussian) -> Gaussian {
        let mut acc = Gaussian::ring_zero();
        for (k, c) in &self.terms {
            let p = z0.pow(*k).expect("evaluation point must be nonzero");
            acc.add_assign_ref(&Gaussian::real(c.clone()).mul_ref(&p));
        }
        acc
    }

    /// `self += c * z^shift * other`.
    pub fn add_scaled_shifted(&mut self, other: &Self, c: &BigRational, shift: i64) {
        if other.terms.is_empty() || c.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(k, v)| (k + shift, v)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ka, va)), Some((kb, vb))) => match ka.cmp(kb) {
                    Ordering::Less => {
                        out.push((*ka, va.clone()));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((*kb, rat_mul(vb, c)));
                        b.next();
                    }
                    Ordering::Equal => {
                        let s = rat_add(va, &rat_mul(vb, c));
                        if !s.is_zero() {
                            out.push((*ka, s));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((ka, va)), None) => {
                    out.push((*ka, va.clone()));
                    a.next();
                }
                (None, Some((kb, vb))) => {
                    out.push((*kb, rat_mul(vb, c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        self.terms = out;
    }

    /// `c * z^shift * self`.
    pub fn scaled_shifted(&self, c: &BigRational, shift: i64) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (k + shift, rat_mul(v, c))).collect() }
    }

    /// Replaces `z` by `z^-1`.
    pub fn invert_variable(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(k, v)| (-k, v.clone())).collect();
        terms.reverse();
        Self { terms }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match *k {
                0 => write!(f, "{}", rat_to_string(c))?,
                1 => write!(f, "{}*z", rat_to_string(c))?,
                _ => write!(f, "{}*z^{}", rat_to_string(c), k)?,
            }
        }
        Ok(())
    }
}

impl Coeff for LaurentPoly {
    const NAME: &'static str = "LaurentPolyZ";

    fn ring_zero() -> Self {
        Self::default()
    }
    fn ring_one() -> Self {
        Self::constant(BigRational::one())
    }
    fn is_ring_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(BigRational::from_i64(n))
    }
    fn from_rational(r: &BigRational) -> Result<Self> {
        Ok(Self::constant(r.clone()))
    }
    fn add_assign_ref(&mut self, other: &Self) {
        self.add_scaled_shifted(other, &BigRational::one(), 0);
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        self.add_scaled_shifted(other, &-BigRational::one(), 0);
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.terms.len() == 1 {
            let (k, c) = &self.terms[0];
            return other.scaled_shifted(c, *k);
        }
        if other.terms.len() == 1 {
            let (k, c) = &other.terms[0];
            return self.scaled_shifted(c, *k);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                raw.push((ka + kb, rat_mul(va, vb)));
            }
        }
        Self::from_terms(raw)
    }
    fn neg_ref(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(k, c)] => Some(Self { terms: vec![(-k, c.recip())] }),
            _ => None,
        }
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.terms.len() == 1 {
            let (k, c) = &a.terms[0];
            self.add_scaled_shifted(b, c, *k);
        } else if b.terms.len() == 1 {
            let (k, c) = &b.terms[0];
            self.add_scaled_shifted(a, c, *k);
        } else {
            let p = a.mul_ref(b);
            self.add_assign_ref(&p);
        }
    }
    fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (k, c) in &self.terms {
            m.insert(k.to_string(), Value::String(rat_to_string(c)));
        }
        Value::Object(m)
    }
    fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| SeriesError::Json(format!("expected a z-exponent map, got {v}")))?;
        let mut raw = Vec::with_capacity(obj.len());
        for (k, c) in obj {
            let k: i64 = k
                .parse()
                .map_err(|_| SeriesError::Json(format!("bad z exponent {k:?}")))?;
            let c = c
                .as_str()
                .ok_or_else(|| SeriesError::Json(format!("expected string coefficient, got {c}")))?;
            raw.push((k, parse_rational(c)?));
        }
        Ok(Self::from_terms(raw))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(k, c)| (k, r(c))).collect())
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let mut p = poly(&[(-1, 1), (0, 2), (1, 1)]);
        p.sub_assign_ref(&poly(&[(0, 2)]));
        assert_eq!(p.terms().len(), 2);
        let q = poly(&[(3, 1), (3, -1)]);
        assert!(Coeff::is_ring_zero(&q));
    }

    #[test]
    fn product_and_evaluation() {
        // (z + z^-1)^2 = z^2 + 2 + z^-2
        let p = poly(&[(-1, 1), (1, 1)]);
        let sq = p.mul_ref(&p);
        assert_eq!(sq, poly(&[(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(sq.at_one(), r(4));
        assert_eq!(p.eval_rational(&BigRational::new(1.into(), 2.into())), BigRational::new(5.into(), 2.into()));
        // i + 1/i = 0
        assert!(Coeff::is_ring_zero(&p.eval_gaussian(&Gaussian::i())));
    }

    #[test]
    fn only_monomials_are_units() {
        assert_eq!(poly(&[(3, 2)]).unit_inverse(), Some(LaurentPoly::monomial(BigRational::new(1.into(), 2.into()), -3)));
        assert!(poly(&[(0, 1), (1, 1)]).unit_inverse().is_none());
    }

    #[test]
    fn json_round_trip() {
        let p = poly(&[(-4, 3), (2, -1)]);
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
    }
}
