use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use hurwitz_core::class_numbers::{hurwitz12, kronecker_f};
use hurwitz_core::combinatorics::{count_p, count_q, list_p, list_q, p_series, Method};
use hurwitz_core::products::{etaq, eval_z_rational, geom_ratio};
use hurwitz_core::theta::{appell_m, jtheta};
use hurwitz_core::{AtRational, Formal, Jet1, JetAtOne, Monomial, QSeries, ZEval};

const ORDER: i64 = 24;

fn series() -> impl Strategy<Value = QSeries<BigInt>> {
    (-3i64..3, prop::collection::vec(-5i64..=5, 0..12)).prop_map(|(lo, cs)| {
        QSeries::from_terms(cs.into_iter().enumerate().map(|(i, c)| (lo + i as i64, BigInt::from(c))), ORDER)
    })
}

/// Series with constant term `+-1`, hence invertible over the integers.
fn unit_series() -> impl Strategy<Value = QSeries<BigInt>> {
    (prop::bool::ANY, prop::collection::vec(-4i64..=4, 0..10)).prop_map(|(neg, cs)| {
        let head = (0, BigInt::from(if neg { -1 } else { 1 }));
        QSeries::from_terms(std::iter::once(head).chain(cs.into_iter().enumerate().map(|(i, c)| (i as i64 + 1, BigInt::from(c)))), ORDER)
    })
}

fn rat(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    (prop_oneof![-5i64..=-1, 1i64..=5], 1i64..=4).prop_map(|(p, d)| rat(p, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn inverse_round_trip(u in unit_series()) {
        let inv = u.inverse().unwrap();
        prop_assert!(u.mul(&inv).compare(&QSeries::one(ORDER)).is_match());
    }

    #[test]
    fn dissection_reassembles(a in series(), p in 1i64..5) {
        let parts = a.dissect(p);
        let mut acc = QSeries::<BigInt>::zero(a.order());
        for (i, f) in parts.iter().enumerate() {
            acc = acc.add(&f.subs_q_power(p).shift(i as i64));
        }
        prop_assert!(acc.compare(&a).is_match());
    }

    #[test]
    fn geom_ratio_times_one_minus_z(a in -6i64..6, b in -6i64..6) {
        let g = geom_ratio(a, b);
        let z0 = rat(3, 2);
        let lhs = g.eval_rational(&z0) * (BigRational::from_integer(1.into()) - &z0);
        let rhs = z0.pow(a as i32) - z0.pow(b as i32);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jet_derivative_of_power(k in -5i64..6, c in -3i64..=3) {
        let j = Jet1::of_termsum([Monomial::new(rat(c, 1), k, 0)], 4);
        prop_assert_eq!(j.f1.coeff(0), rat(c * k, 1));
        let sq = j.mul(&j);
        prop_assert_eq!(sq.f1.coeff(0), rat(2 * c * c * k, 1));
    }

    #[test]
    fn theta_quasi_periodicity(x in nonzero_rational(), k in 1i64..4) {
        // j(q^k x; q^k) = -x^{-1} j(x; q^k)
        let e = AtRational::int(1);
        let xm = Monomial::new(x.clone(), 0, 0);
        let n = 20;
        let shifted = jtheta(&e, &xm.shift_q(k), k, n).unwrap();
        let base = jtheta(&e, &xm, k, n).unwrap().scale(&(-x.recip()));
        prop_assert!(shifted.compare(&base).is_match());
    }

    #[test]
    fn appell_z_shift(x in nonzero_rational(), z in nonzero_rational()) {
        prop_assume!(z != rat(1, 1) && &x * &z != rat(1, 1));
        let e = AtRational::int(1);
        let xm = Monomial::new(x, 0, 1);
        let zm = Monomial::new(z, 0, 0);
        let n = 16;
        let a = appell_m(&e, &xm, 1, &zm, n).unwrap();
        let b = appell_m(&e, &xm, 1, &zm.shift_q(1), n).unwrap();
        prop_assert!(a.compare(&b).is_match());
    }

    #[test]
    fn formal_specializes_like_pointwise(z in nonzero_rational()) {
        prop_assume!(z != rat(1, 1) && z != rat(-1, 1));
        let x = Monomial::new(rat(1, 1), 1, 1);
        let n = 12;
        let formal = jtheta(&Formal, &x, 2, n).unwrap();
        let point = jtheta(&AtRational(z.clone()), &x, 2, n).unwrap();
        prop_assert!(eval_z_rational(&formal, &z).unwrap().compare(&point).is_match());
    }

    #[test]
    fn class_numbers_vanish_off_residues(n in 1u64..5000) {
        if n % 4 == 1 || n % 4 == 2 {
            prop_assert_eq!(hurwitz12(n), 0);
        } else {
            prop_assert!(hurwitz12(n) > 0);
        }
    }

    #[test]
    fn kronecker_f_relation(n in 0i64..400) {
        let m = 4 * n + 3;
        let f = kronecker_f(m).unwrap();
        let h12 = hurwitz12(m as u64);
        let want = if m % 8 == 7 { h12 } else { 3 * h12 };
        prop_assert_eq!(12 * f, want);
    }

    #[test]
    fn enumerations_are_consistent(n in 1i64..60) {
        let ps = list_p(n).unwrap();
        prop_assert_eq!(ps.len() as u64, count_p(n).unwrap());
        prop_assert!(ps.iter().all(|c| c.parts().iter().sum::<i64>() == n && c.total() == n));
        let qs = list_q(n).unwrap();
        prop_assert_eq!(qs.len() as u64, count_q(n).unwrap());
        prop_assert!(qs.iter().all(|c| c.parts().iter().sum::<i64>() == n && c.total() == n));
    }

    #[test]
    fn truncation_is_monotone(a in series(), n in 0i64..ORDER) {
        prop_assert!(a.truncate(n).compare(&a).is_match());
    }
}

#[test]
fn eta_product_matches_euler_pentagonal() {
    let n = 60;
    let mut terms = Vec::new();
    for k in -10i64..=10 {
        let e = k * (3 * k - 1) / 2;
        if e <= n {
            terms.push((e, BigInt::from(if k % 2 == 0 { 1 } else { -1 })));
        }
    }
    assert!(etaq(1, n).compare(&QSeries::from_terms(terms, n)).is_match());
}

#[test]
fn jet_at_one_of_z_power_theta() {
    // d/dz j(z;q) at z = 1 is -J1^3
    let v = hurwitz_core::with_order(30, |n| jtheta(&JetAtOne, &Monomial::z(1), 1, n)).unwrap();
    assert!(v.f0.is_zero());
    assert!(v.f1.compare(&hurwitz_core::products::to_rational(&etaq(1, 30).pow(3)).neg()).is_match());
}

#[test]
fn formula_and_enumeration_agree_at_small_order() {
    assert!(p_series(40, Method::Formula).unwrap().compare(&p_series(40, Method::Direct).unwrap()).is_match());
}

#[test]
fn rational_point_monomial_value() {
    let e = AtRational(rat(2, 1));
    let v = e.monomial(&Monomial::new(rat(3, 1), 2, 1), 5).unwrap();
    assert_eq!(v.coeff(1), rat(12, 1));
}
