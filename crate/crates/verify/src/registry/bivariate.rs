use num_rational::BigRational;

use hurwitz_core::mock_theta::{eulerian, f4_value, f8_value, Eulerian};
use hurwitz_core::products::{embed, to_rational, BinomialProduct, Count};
use hurwitz_core::theta::{appell_m, f_abc, jtheta};
use hurwitz_core::{with_order, AtGaussian, AtRational, Formal, Gaussian, LaurentPoly, Monomial, QSeries, Result, SeriesValue, ZEval};

use super::helpers::{at_witnesses, f_series};
use super::{case, Group, IdentityCase, Mode};
use crate::families::{appell, hecke_rogers};
use crate::outcome::compare;

type FormalSeries = QSeries<LaurentPoly>;

fn m(s: i64, z: i64, q: i64) -> Monomial {
    Monomial::signed(s, z, q)
}

/// `prod (x; q^step)_inf` over the given arguments.
fn infinite<E: ZEval>(e: &E, factors: &[(Monomial, i64)], order: i64) -> Result<E::Value> {
    factors
        .iter()
        .fold(BinomialProduct::new(), |p, (x, step)| p.poch(x.clone(), *step, Count::Infinite))
        .expand(e, order)
}

/// `p(z) -> z^shift p(1/z)` on every coefficient.
fn reflect(s: &FormalSeries, shift: i64) -> FormalSeries {
    let one = BigRational::from_integer(1.into());
    s.map_coeffs(|p| p.invert_variable().scaled_shifted(&one, shift))
}

fn f8_lhs(n: i64) -> Result<FormalSeries> {
    let pre = infinite(&Formal, &[(m(1, 1, 1), 2), (m(1, -1, 1), 2), (m(1, 0, 2), 2)], n)?;
    Ok(pre.mul(&f8_value(&Formal, n)?))
}

fn f4_lhs(n: i64) -> Result<FormalSeries> {
    let pre = infinite(&Formal, &[(m(-1, 1, 1), 1), (m(-1, -1, 0), 1), (m(1, 0, 1), 1)], n)?;
    Ok(pre.mul(&f4_value(&Formal, n)?.neg_q()))
}

/// `j(q; q^2)^2 / (2 j(z; q))`
fn theta_ratio<E: ZEval>(e: &E, n: i64) -> Result<E::Value> {
    with_order(n, |w| {
        let num = jtheta(e, &Monomial::q(1), 2, w)?;
        let den = jtheta(e, &Monomial::z(1), 1, w)?;
        num.mul(&num).mul(&den.inverse()?).scale(&BigRational::new(1.into(), 2.into()))
    })
}

pub(super) fn cases() -> Vec<IdentityCase> {
    use Group::*;
    use Mode::*;
    vec![
        case(
            "f8-bivariate-hecke-rogers",
            Bivariate,
            FormalZ,
            "(zq, q/z, q^2; q^2)_inf F8(z,q) = sum_{1<=j<=|n|} sg(n)(-1)^{j-1} q^{2n^2-n-j^2+j} (z^{1-j}-z^j)/(1-z)",
            |n| {
                let rhs = hecke_rogers("F8z").expect("registered").evaluate(&Formal, n)?;
                Ok(compare(&f8_lhs(n)?, &rhs))
            },
        ),
        case(
            "f4-bivariate-hecke-rogers",
            Bivariate,
            FormalZ,
            "(-zq, -1/z, q; q)_inf F4(z,-q) = sum_{1<=j<=n} q^{n^2-j(j-1)/2} (z^n-z^{-n})/(1-z)",
            |n| {
                let rhs = hecke_rogers("F4z").expect("registered").evaluate(&Formal, n)?;
                Ok(compare(&f4_lhs(n)?, &rhs))
            },
        ),
        case(
            "f4-bivariate-appell-lerch",
            Bivariate,
            FormalZ,
            "(zq, q/z, q^2; q^2)_inf F4(z,q) = sum_{k>=1} (-1)^{k-1} q^{k^2}/(1+q^{2k-1}) (z^{1-k}-z^k)/(1-z)",
            |n| {
                let pre = infinite(&Formal, &[(m(1, 1, 1), 2), (m(1, -1, 1), 2), (m(1, 0, 2), 2)], n)?;
                let lhs = pre.mul(&f4_value(&Formal, n)?);
                Ok(compare(&lhs, &appell("F4z").expect("registered").evaluate(&Formal, n)?))
            },
        ),
        case(
            "f8-bivariate-appell-lerch",
            Bivariate,
            FormalZ,
            "(z^2q^2, q^2/z^2, q^4; q^4)_inf F8(z,q) = sum_k (-1)^{k-1} q^{2k^2}/(1+q^{4k-1}) (z^{1-2k}-z^{2k})/(1-z)",
            |n| {
                let pre = infinite(&Formal, &[(m(1, 2, 2), 4), (m(1, -2, 2), 4), (m(1, 0, 4), 4)], n)?;
                let lhs = pre.mul(&f8_value(&Formal, n)?);
                Ok(compare(&lhs, &appell("F8z").expect("registered").evaluate(&Formal, n)?))
            },
        ),
        case("f8-bivariate-z-symmetry", Bivariate, FormalZ, "coefficients of z^i and z^{-i} agree in (zq, q/z, q^2; q^2)_inf F8(z,q)", |n| {
            let lhs = f8_lhs(n)?;
            Ok(compare(&lhs, &reflect(&lhs, 0)))
        }),
        case("f4-bivariate-z-symmetry", Bivariate, FormalZ, "coefficients of z^i and z^{-1-i} agree in (-zq, -1/z, q; q)_inf F4(z,-q)", |n| {
            let lhs = f4_lhs(n)?;
            Ok(compare(&lhs, &reflect(&lhs, -1)))
        }),
        // specializations
        case("f8-at-one", Specialization, Univariate, "F8(1,q) = sum F(8n-1) q^n", |n| {
            Ok(compare(&f8_value(&AtRational::int(1), n)?, &to_rational(&f_series(8, -1, n)?)))
        })
        .order(100),
        case("f8-at-minus-one-negated", Specialization, Univariate, "F8(-1,-q) = -A(q)", |n| {
            let lhs = f8_value(&AtRational::int(-1), n)?.neg_q();
            Ok(compare(&lhs, &to_rational(&eulerian(Eulerian::A, n)).neg()))
        })
        .order(100),
        case("f4-at-one", Specialization, Univariate, "F4(1,q) = sum F(4n-1) q^n", |n| {
            Ok(compare(&f4_value(&AtRational::int(1), n)?, &to_rational(&f_series(4, -1, n)?)))
        })
        .order(100),
        case("f4-at-i-negated", Specialization, Univariate, "F4(i,-q) = -V1(q)", |n| {
            let e = AtGaussian(Gaussian::i());
            let lhs = f4_value(&e, n)?.neg_q();
            let rhs = embed(&e, &eulerian(Eulerian::V1, n))?.neg();
            Ok(compare(&lhs, &rhs))
        })
        .order(100),
        // numeric z
        case("f4-appell-lerch-m", Bivariate, NumericZ, "(1 - 1/z) F4(z,q) = m(-z, q^2, -q)", |n| {
            at_witnesses(n, |e, n| {
                let lhs = e.mul_one_minus(&f4_value(e, n)?, &Monomial::z(-1))?;
                let rhs = appell_m(e, &m(-1, 1, 0), 2, &m(-1, 0, 1), n)?;
                Ok((lhs, rhs))
            })
        }),
        case("f8-appell-lerch-m", Bivariate, NumericZ, "(1 - z) F8(z,q) = -z (m(-z, q, -1) - j(q;q^2)^2/(2 j(z;q)))", |n| {
            at_witnesses(n, |e, n| {
                let lhs = e.mul_one_minus(&f8_value(e, n)?, &Monomial::z(1))?;
                let inner = appell_m(e, &m(-1, 1, 0), 1, &m(-1, 0, 0), n)?.sub(&theta_ratio(e, n)?);
                Ok((lhs, e.mul_monomial(&inner, &m(-1, 1, 0))?))
            })
        }),
        case(
            "m-minus-one-base-four-split",
            Relations,
            NumericZ,
            "m(-z, q, -1) = m(-qz^2, q^4, q^2/z^2) - z^{-1} m(-q/z^2, q^4, q^2 z^2) + j(q;q^2)^2/(2 j(z;q))",
            |n| {
                at_witnesses(n, |e, n| {
                    let lhs = appell_m(e, &m(-1, 1, 0), 1, &m(-1, 0, 0), n)?;
                    let a = appell_m(e, &m(-1, 2, 1), 4, &m(1, -2, 2), n)?;
                    let b = e.mul_monomial(&appell_m(e, &m(-1, -2, 1), 4, &m(1, 2, 2), n)?, &Monomial::z(-1))?;
                    Ok((lhs, a.sub(&b).add(&theta_ratio(e, n)?)))
                })
            },
        ),
        case(
            "f121-twelfth-instance",
            Relations,
            NumericZ,
            "q z^3 f121(q^3 z^4, -q^4 z^2, q^2) = z^{-1} (j(-z^2;q^2) m(q, q^6, -z^2/q) - j(q z^4;q^2) m(-q^2/z^6, q^6, -q^5 z^2))",
            |n| {
                at_witnesses(n, |e, n| {
                    let f = f_abc(e, (1, 2, 1), &m(1, 4, 3), &m(-1, 2, 4), 2, n)?;
                    let lhs = e.mul_monomial(&f, &m(1, 3, 1))?;
                    let rhs = with_order(n, |w| {
                        let a = jtheta(e, &m(-1, 2, 0), 2, w)?.mul(&appell_m(e, &Monomial::q(1), 6, &m(-1, 2, -1), w)?);
                        let b = jtheta(e, &m(1, 4, 1), 2, w)?.mul(&appell_m(e, &m(-1, -6, 2), 6, &m(-1, 2, 5), w)?);
                        e.mul_monomial(&a.sub(&b), &Monomial::z(-1))
                    })?;
                    Ok((lhs, rhs))
                })
            },
        )
        .order(40),
        case(
            "m-change-z-twelfth",
            Relations,
            NumericZ,
            "m(-q^2/z^6, q^6, -q^5 z^2) = m(-q^2/z^6, q^6, q^3 z^6) + J6^3 j(-q^4z^4;q^6) j(q^4z^2;q^6)/(j(-q^5z^2;q^6) j(q^3z^6;q^6) j(-q^5;q^6) j(q^5z^4;q^6))",
            |n| {
                at_witnesses(n, |e, n| {
                    let x = m(-1, -6, 2);
                    let lhs = appell_m(e, &x, 6, &m(-1, 2, 5), n)?;
                    let corr = with_order(n, |w| {
                        let j = |s, zd, qd| jtheta(e, &m(s, zd, qd), 6, w);
                        let num = j(-1, 4, 4)?.mul(&j(1, 2, 4)?).mul(&embed(e, &hurwitz_core::products::etaq(6, w).pow(3))?);
                        let den = j(-1, 2, 5)?.mul(&j(1, 6, 3)?).mul(&j(-1, 0, 5)?).mul(&j(1, 4, 5)?);
                        Ok(num.mul(&den.inverse()?))
                    })?;
                    Ok((lhs, appell_m(e, &x, 6, &m(1, 6, 3), n)?.add(&corr)))
                })
            },
        ),
        case(
            "m-change-z-twenty-fourth-a",
            Relations,
            NumericZ,
            "m(-q^5 z^12, q^12, 1/(q z^4)) = m(-q^5 z^12, q^12, q^6/z^12) + J12^3 j(q^5z^8;q^12) j(-q^2z^4;q^12)/(j(qz^4;q^12) j(q^6z^12;q^12) j(-q^4z^8;q^12) j(-q^11;q^12))",
            |n| {
                at_witnesses(n, |e, n| {
                    let x = m(-1, 12, 5);
                    let lhs = appell_m(e, &x, 12, &m(1, -4, -1), n)?;
                    let corr = with_order(n, |w| {
                        let j = |s, zd, qd| jtheta(e, &m(s, zd, qd), 12, w);
                        let num = j(1, 8, 5)?.mul(&j(-1, 4, 2)?).mul(&embed(e, &hurwitz_core::products::etaq(12, w).pow(3))?);
                        let den = j(1, 4, 1)?.mul(&j(1, 12, 6)?).mul(&j(-1, 8, 4)?).mul(&j(-1, 0, 11)?);
                        Ok(num.mul(&den.inverse()?))
                    })?;
                    Ok((lhs, appell_m(e, &x, 12, &m(1, -12, 6), n)?.add(&corr)))
                })
            },
        )
        .order(40),
        case(
            "m-change-z-twenty-fourth-b",
            Relations,
            NumericZ,
            "m(-1/(q z^12), q^12, q z^4) = m(-1/(q z^12), q^12, q^6 z^12) - q z^12 J12^3 j(q^5z^8;q^12) j(-q^6z^4;q^12)/(j(qz^4;q^12) j(q^6z^12;q^12) j(-z^8;q^12) j(-q^5;q^12))",
            |n| {
                at_witnesses(n, |e, n| {
                    let x = m(-1, -12, -1);
                    let lhs = appell_m(e, &x, 12, &m(1, 4, 1), n)?;
                    let corr = with_order(n, |w| {
                        let j = |s, zd, qd| jtheta(e, &m(s, zd, qd), 12, w);
                        let num = j(1, 8, 5)?.mul(&j(-1, 4, 6)?).mul(&embed(e, &hurwitz_core::products::etaq(12, w).pow(3))?);
                        let den = j(1, 4, 1)?.mul(&j(1, 12, 6)?).mul(&j(-1, 8, 0)?).mul(&j(-1, 0, 5)?);
                        e.mul_monomial(&num.mul(&den.inverse()?), &m(1, 12, 1))
                    })?;
                    Ok((lhs, appell_m(e, &x, 12, &m(1, 12, 6), n)?.sub(&corr)))
                })
            },
        )
        .order(40),
    ]
}
