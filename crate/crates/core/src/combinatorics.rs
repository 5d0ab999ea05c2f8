//! Unimodal compositions with unit steps and consecutive-part partitions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;

use crate::error::{Result, SeriesError};
use crate::eval::{Integral, ZEval};
use crate::monomial::Monomial;
use crate::series::QSeries;

/// `x, x+1, ..., y, y-1, ..., z` with `1 <= x, z <= y`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct UnimodalComposition {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl UnimodalComposition {
    pub fn total(&self) -> i64 {
        unimodal_total(self.y, self.x, self.z)
    }

    pub fn parts(&self) -> Vec<i64> {
        (self.x..=self.y).chain((self.z..self.y).rev()).collect()
    }
}

impl fmt::Display for UnimodalComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", p.join(","))
    }
}

/// `(m+1) + (m+2) + ... + l` followed by `k` extra copies of `l`, with `0 <= m < l`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct ConsecutivePartition {
    pub m: i64,
    pub l: i64,
    pub k: i64,
}

impl ConsecutivePartition {
    pub fn total(&self) -> i64 {
        self.l * (self.l + 1) / 2 - self.m * (self.m + 1) / 2 + self.k * self.l
    }

    pub fn parts(&self) -> Vec<i64> {
        (self.m + 1..=self.l).chain(std::iter::repeat(self.l).take(self.k as usize)).collect()
    }
}

impl fmt::Display for ConsecutivePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts().iter().map(|v| v.to_string()).collect();
        f.write_str(&p.join("+"))
    }
}

/// Exponent `y^2 - x(x-1)/2 - z(z-1)/2`.
pub fn unimodal_total(y: i64, x: i64, z: i64) -> i64 {
    y * y - x * (x - 1) / 2 - z * (z - 1) / 2
}

fn positive(n: i64) -> Result<()> {
    if n < 1 {
        return Err(SeriesError::InvalidArgument(format!("n = {n}: counts are defined for n >= 1")));
    }
    Ok(())
}

/// Every unimodal composition of `n`, sorted.
pub fn list_p(n: i64) -> Result<Vec<UnimodalComposition>> {
    positive(n)?;
    let mut out = Vec::new();
    // the total is at least y, reached at x = z = y
    for y in 1..=n {
        for x in 1..=y {
            for z in 1..=y {
                if unimodal_total(y, x, z) == n {
                    out.push(UnimodalComposition { x, y, z });
                }
            }
        }
    }
    Ok(out)
}

pub fn count_p(n: i64) -> Result<u64> {
    positive(n)?;
    let mut count = 0u64;
    for y in 1..=n {
        for x in 1..=y {
            // solve z(z-1)/2 = y^2 - x(x-1)/2 - n for 1 <= z <= y
            let t = unimodal_total(y, x, 1) - n;
            if t < 0 {
                continue;
            }
            let z = (1 + (1 + 8 * t).sqrt()) / 2;
            for zz in [z - 1, z, z + 1] {
                if (1..=y).contains(&zz) && zz * (zz - 1) / 2 == t {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// Every consecutive-part partition of `n`, sorted.
pub fn list_q(n: i64) -> Result<Vec<ConsecutivePartition>> {
    positive(n)?;
    let mut out = Vec::new();
    for l in 1..=n {
        for m in 0..l {
            for k in 0..=n / l {
                let p = ConsecutivePartition { m, l, k };
                if p.total() == n {
                    out.push(p);
                }
            }
        }
    }
    Ok(out)
}

pub fn count_q(n: i64) -> Result<u64> {
    positive(n)?;
    let mut count = 0u64;
    for l in 1..=n {
        for m in 0..l {
            let base = l * (l + 1) / 2 - m * (m + 1) / 2;
            if base <= n && (n - base) % l == 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// How a generating function is produced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    /// Counting objects one `n` at a time.
    Direct,
    /// Expanding the closed multiple sum.
    Formula,
}

fn from_counts(order: i64, f: impl Fn(i64) -> Result<u64>) -> Result<QSeries<BigInt>> {
    let mut terms = Vec::new();
    for n in 1..=order {
        terms.push((n, BigInt::from(f(n)?)));
    }
    Ok(QSeries::from_terms(terms, order))
}

/// `sum_{n >= 1} P(n) q^n`.
pub fn p_series(order: i64, method: Method) -> Result<QSeries<BigInt>> {
    match method {
        Method::Direct => from_counts(order, count_p),
        Method::Formula => {
            let mut terms = Vec::new();
            for y in 1..=order.max(0) {
                for x in 1..=y {
                    for z in 1..=y {
                        let e = unimodal_total(y, x, z);
                        if e <= order {
                            terms.push((e, BigInt::from(1)));
                        }
                    }
                }
            }
            Ok(QSeries::from_terms(terms, order))
        }
    }
}

/// `sum_{n >= 1} Q(n) q^n`.
pub fn q_series(order: i64, method: Method) -> Result<QSeries<BigInt>> {
    match method {
        Method::Direct => from_counts(order, count_q),
        Method::Formula => {
            let e = Integral;
            let mut acc = e.zero(order)?;
            for l in 1..=order.max(0) {
                for m in 1..=l {
                    let d = l * (l + 1) / 2 - m * (m - 1) / 2;
                    if d <= order {
                        let t = e.monomial(&Monomial::q(d), order)?;
                        acc = acc.add(&e.div_one_minus(&t, &Monomial::q(l))?);
                    }
                }
            }
            Ok(acc)
        }
    }
}

/// Humbert's double sum `sum_{m >= 0} sum_{|u| <= m} q^{(m+1)^2 - u^2} / (1 - q^{2m+1})`.
pub fn humbert_series(order: i64) -> QSeries<BigInt> {
    let mut acc = QSeries::<BigInt>::zero(order);
    let mut m = 0;
    // the smallest exponent in row m is 2m+1, at u = ±m
    while 2 * m + 1 <= order {
        let terms = (-m..=m).map(|u| ((m + 1) * (m + 1) - u * u, BigInt::from(1)));
        let row = QSeries::from_terms(terms, order).div_one_minus(&BigInt::from(1), 2 * m + 1);
        acc = acc.add(&row);
        m += 1;
    }
    acc
}

/// Humbert's sum with each geometric row unfolded into `q^{y^2 - x(x-1)/2 - z(z-1)/2}` at
/// `(y, x, z) = (k+m, k+u, k-u)`, `k >= 1`.
pub fn humbert_unfolded(order: i64) -> QSeries<BigInt> {
    let mut terms = Vec::new();
    let mut m = 0;
    while 2 * m + 1 <= order {
        for u in -m..=m {
            let mut k = 1;
            loop {
                let e = unimodal_total(k + m, k + u, k - u);
                if e > order {
                    break;
                }
                terms.push((e, BigInt::from(1)));
                k += 1;
            }
        }
        m += 1;
    }
    QSeries::from_terms(terms, order)
}

/// Checks `B(y,x,z) = B(y,x,1-z) = B(y,1-x,z)` for the exponent polynomial.
///
/// Both sides are quadratic in each variable, so agreement on a 3x3x3 grid
/// is agreement as polynomials.
pub fn unimodal_symmetry_holds() -> bool {
    let grid = [-1i64, 0, 1];
    grid.iter().all(|&y| {
        grid.iter().all(|&x| {
            grid.iter().all(|&z| {
                let b = unimodal_total(y, x, z);
                b == unimodal_total(y, x, 1 - z) && b == unimodal_total(y, 1 - x, z)
            })
        })
    })
}

/// `q sum_{sg(s)=sg(t)} sg(s) q^{2st + 2s + (lin) t} / (1 - q^{2(s+t) + den})`.
fn sign_region_sum(lin_t: i64, den: i64, order: i64) -> Result<QSeries<BigInt>> {
    let e = Integral;
    let mut acc = e.zero(order)?;
    for quad in [1i64, -1] {
        let start = if quad == 1 { 0 } else { -1 };
        let lo = |s: i64, t: i64| {
            let d = 2 * (s + t) + den;
            1 + 2 * s * t + 2 * s + lin_t * t + (-d).max(0)
        };
        let mut s = start;
        // lo is increasing in |s| and |t| away from the corner of each quadrant
        while lo(s, start) <= order || lo(s + quad, start) < lo(s, start) {
            let mut t = start;
            while lo(s, t) <= order || lo(s, t + quad) < lo(s, t) {
                let num = Monomial::signed(quad, 0, 1 + 2 * s * t + 2 * s + lin_t * t);
                let w = Monomial::q(2 * (s + t) + den);
                let v = e.monomial(&num, order)?;
                acc = acc.add(&e.div_one_minus(&v, &w)?);
                t += quad;
            }
            s += quad;
        }
    }
    Ok(acc)
}

/// `q sum_{sg(s)=sg(t)} sg(s) q^{2st+2s+t} / (1 - q^{2(s+t)+2})`, equal to `sum Q(n) q^n`.
pub fn q_sign_region_series(order: i64) -> Result<QSeries<BigInt>> {
    sign_region_sum(1, 2, order)
}

/// `q sum_{sg(s)=sg(t)} sg(s) q^{2st+2s+2t} / (1 - q^{2(s+t)+1})`, equal to `F_{8,-1}`.
pub fn f8_sign_region_series(order: i64) -> Result<QSeries<BigInt>> {
    sign_region_sum(2, 1, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_p(1).unwrap(), 1);
        assert_eq!(count_p(3).unwrap(), 3);
        assert_eq!(count_p(4).unwrap(), 2);
        let listed: Vec<String> = list_p(3).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(listed.len(), 3);
        for want in ["[3]", "[1,2]", "[2,1]"] {
            assert!(listed.contains(&want.to_string()), "{want}");
        }
        let listed: Vec<String> = list_p(4).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(listed.len(), 2);
        assert!(listed.contains(&"[1,2,1]".to_string()));

        assert_eq!(count_q(1).unwrap(), 1);
        assert_eq!(count_q(2).unwrap(), 2);
        assert_eq!(count_q(3).unwrap(), 3);
        let listed: Vec<String> = list_q(3).unwrap().iter().map(|c| c.to_string()).collect();
        for want in ["3", "1+2", "1+1+1"] {
            assert!(listed.contains(&want.to_string()), "{want}");
        }
        assert!(count_p(0).is_err() && count_q(0).is_err());
    }

    #[test]
    fn lists_match_counts() {
        for n in 1..=40 {
            assert_eq!(list_p(n).unwrap().len() as u64, count_p(n).unwrap());
            assert_eq!(list_q(n).unwrap().len() as u64, count_q(n).unwrap());
            assert!(list_p(n).unwrap().iter().all(|c| c.parts().iter().sum::<i64>() == n));
            assert!(list_q(n).unwrap().iter().all(|c| c.parts().iter().sum::<i64>() == n));
        }
    }

    #[test]
    fn series_methods_agree() {
        assert!(p_series(60, Method::Direct).unwrap().compare(&p_series(60, Method::Formula).unwrap()).is_match());
        assert!(q_series(60, Method::Direct).unwrap().compare(&q_series(60, Method::Formula).unwrap()).is_match());
        let p = p_series(4, Method::Formula).unwrap();
        assert_eq!(p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(), ["1", "1", "3", "2"]);
    }

    #[test]
    fn humbert_unfolds() {
        assert!(unimodal_symmetry_holds());
        assert!(humbert_series(40).compare(&humbert_unfolded(40)).is_match());
    }

    #[test]
    fn sign_region_forms() {
        assert!(q_sign_region_series(40).unwrap().compare(&q_series(40, Method::Direct).unwrap()).is_match());
    }
}
