//! Result of checking one identity, independent of how it was evaluated.

use num_bigint::BigInt;
use serde::Serialize;

use hurwitz_core::{Coeff, Comparison, QSeries};

/// First coefficient where the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exp: i64,
    pub lhs: String,
    pub rhs: String,
    /// Evaluation point or sub-check that produced the mismatch.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub certified_order: i64,
    pub mismatch: Option<Mismatch>,
}

impl Outcome {
    pub fn pass(certified_order: i64) -> Self {
        Self { certified_order, mismatch: None }
    }

    /// A failure first seen at exponent `exp`.
    pub fn fail(exp: i64, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Self { certified_order: exp - 1, mismatch: Some(Mismatch { exp, lhs: lhs.into(), rhs: rhs.into(), at: None }) }
    }

    pub fn is_pass(&self) -> bool {
        self.mismatch.is_none()
    }

    /// Labels the mismatch (if any) with where it happened.
    pub fn at(mut self, label: impl Into<String>) -> Self {
        if let Some(m) = &mut self.mismatch {
            m.at = Some(label.into());
        }
        self
    }

    /// Joint outcome of two sub-checks: the weaker order, the first mismatch.
    pub fn and(self, other: Outcome) -> Outcome {
        Outcome {
            certified_order: self.certified_order.min(other.certified_order),
            mismatch: self.mismatch.or(other.mismatch),
        }
    }

    pub fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
        outcomes.into_iter().reduce(Outcome::and).unwrap_or(Outcome::pass(i64::MAX))
    }
}

impl From<Comparison> for Outcome {
    fn from(c: Comparison) -> Self {
        Outcome {
            certified_order: c.certified_order,
            mismatch: c.first_mismatch.map(|(exp, lhs, rhs)| Mismatch { exp, lhs, rhs, at: None }),
        }
    }
}

/// Exact coefficientwise comparison.
pub fn compare<R: Coeff>(lhs: &QSeries<R>, rhs: &QSeries<R>) -> Outcome {
    lhs.compare(rhs).into()
}

/// Comparison modulo `m`: every coefficient of `lhs - rhs` must be divisible by `m`.
pub fn compare_mod(lhs: &QSeries<BigInt>, rhs: &QSeries<BigInt>, m: u32) -> Outcome {
    let order = lhs.order().min(rhs.order());
    let modulus = BigInt::from(m);
    let lo = lhs.min_exp().min(rhs.min_exp());
    for e in lo..=order {
        let (a, b) = (lhs.coeff(e), rhs.coeff(e));
        if (&a - &b) % &modulus != BigInt::from(0) {
            return Outcome {
                certified_order: e - 1,
                mismatch: Some(Mismatch { exp: e, lhs: a.to_string(), rhs: b.to_string(), at: Some(format!("mod {m}")) }),
            };
        }
    }
    Outcome::pass(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> QSeries<BigInt> {
        QSeries::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn congruence_compare() {
        assert!(compare_mod(&ints(&[1, 5, -3]), &ints(&[-3, 1, 1]), 4).is_pass());
        let o = compare_mod(&ints(&[1, 5, -3]), &ints(&[-3, 2, 1]), 4);
        assert_eq!(o.mismatch.unwrap().exp, 1);
    }

    #[test]
    fn combining_keeps_weakest_order_and_first_mismatch() {
        let a = Outcome::pass(10);
        let b = compare(&ints(&[1, 2]), &ints(&[1, 3])).at("z = 2");
        let c = a.and(b);
        assert_eq!(c.certified_order, 0);
        assert_eq!(c.mismatch.unwrap().at.as_deref(), Some("z = 2"));
    }
}
