use hurwitz_core::products::to_rational;
use hurwitz_core::theta::{appell_m, f_abc, jtheta};
use hurwitz_core::{Integral, Jet1, JetAtOne, Monomial, Result, ZEval};

use super::helpers::{derivative, eta_r, rat, RatSeries};
use super::{case, Group, IdentityCase, Mode};
use crate::families::{appell, hecke_rogers};
use crate::outcome::compare;

const E: JetAtOne = JetAtOne;

fn m(s: i64, z: i64, q: i64) -> Monomial {
    Monomial::signed(s, z, q)
}

/// `j(s z^zd q^qd; q^k)` as a jet.
fn j(s: i64, zd: i64, qd: i64, k: i64, n: i64) -> Result<Jet1> {
    jtheta(&E, &m(s, zd, qd), k, n)
}

/// `c q^shift prod J_k^e` as a `z`-free jet.
fn eta_jet(p: i64, d: i64, shift: i64, factors: &[(i64, i64)], n: i64) -> Result<Jet1> {
    Ok(Jet1::constant(eta_r(p, d, shift, factors, n)))
}

/// `z^zd q^qd * v`
fn times(v: &Jet1, zd: i64, qd: i64) -> Result<Jet1> {
    E.mul_monomial(v, &m(1, zd, qd))
}

/// Derivative of `z^{-p} j(s z^zd q^qd; q^k)` at `z = 1`.
fn theta_slope(p: i64, s: i64, zd: i64, qd: i64, k: i64, n: i64) -> Result<RatSeries> {
    derivative(n, |w| times(&j(s, zd, qd, k, w)?, -p, 0))
}

fn zero(n: i64) -> RatSeries {
    RatSeries::zero(n)
}

/// `J1^4/J3 + 9q J9^3 J1/J3`
fn u3_j1_cubed(n: i64) -> RatSeries {
    eta_r(1, 1, 0, &[(1, 4), (3, -1)], n).add(&eta_r(9, 1, 1, &[(9, 3), (1, 1), (3, -1)], n))
}

/// `J12 J3 J2^12/(J6^3 J4^4 J1^4)` shifted by `q^shift`
fn p125_a(c: i64, d: i64, shift: i64, n: i64) -> RatSeries {
    eta_r(c, d, shift, &[(12, 1), (3, 1), (2, 12), (6, -3), (4, -4), (1, -4)], n)
}

/// `J18^9 J12 J3 J2^3/(J36^3 J9^3 J6^3 J4 J1)`
fn p125_b(c: i64, d: i64, shift: i64, n: i64) -> RatSeries {
    eta_r(c, d, shift, &[(18, 9), (12, 1), (3, 1), (2, 3), (36, -3), (9, -3), (6, -3), (4, -1), (1, -1)], n)
}

/// `J2^13/(J4^5 J1^5)`
fn p125_c(c: i64, d: i64, shift: i64, n: i64) -> RatSeries {
    eta_r(c, d, shift, &[(2, 13), (4, -5), (1, -5)], n)
}

fn twelfth_appell(n: i64) -> Result<RatSeries> {
    Ok(to_rational(&appell("F12").expect("registered").evaluate(&Integral, n)?))
}

/// The first bracketed term of the 24th-order theta quotient.
fn quotient24_first(w: i64) -> Result<Jet1> {
    let pre = eta_jet(1, 1, -1, &[(12, 1), (4, 2), (8, -1), (6, -1)], w)?
        .mul(&j(-1, 4, 1, 12, w)?)
        .mul(&j(-1, 8, 0, 12, w)?.mul(&j(-1, 8, 4, 12, w)?).inverse()?);
    let j14 = j(1, 8, 14, 24, w)?;
    let inner = eta_jet(1, 1, 0, &[(12, 2), (8, 1), (24, -2), (4, -1)], w)?
        .mul(&j14)
        .mul(&j14)
        .sub(&eta_jet(1, 1, 2, &[(24, 2), (6, 1), (4, 2), (12, -2), (8, -1), (2, -1)], w)?.mul(&j(1, 8, 8, 12, w)?));
    times(&pre.mul(&inner), 5, 0)
}

/// The full 24th-order theta quotient `g(z)` whose slope is an eta quotient.
fn quotient24(w: i64) -> Result<Jet1> {
    let pre = eta_jet(1, 1, 0, &[(12, 3)], w)?
        .mul(&j(1, 4, 1, 2, w)?)
        .mul(&j(1, 8, 5, 12, w)?)
        .mul(&j(1, 4, 1, 12, w)?.mul(&j(1, 12, 6, 12, w)?).inverse()?);
    let a = j(-1, 4, 2, 12, w)?.mul(&j(-1, 8, 4, 12, w)?.mul(&j(-1, 0, 11, 12, w)?).inverse()?);
    let b = times(&j(-1, 4, 6, 12, w)?.mul(&j(-1, 8, 0, 12, w)?.mul(&j(-1, 0, 5, 12, w)?).inverse()?), 4, -1)?;
    let second = times(&pre.mul(&a.add(&b)), 1, 0)?;
    Ok(quotient24_first(w)?.sub(&second))
}

pub(super) fn cases() -> Vec<IdentityCase> {
    use Group::Derivative;
    use Mode::Jet;
    vec![
        case("theta-slope-zq-base2", Derivative, Jet, "d/dz j(zq;q^2) at z=1 = 0", |n| {
            Ok(compare(&theta_slope(0, 1, 1, 1, 2, n)?, &zero(n)))
        }),
        case("theta-slope-minus-zq-base2", Derivative, Jet, "d/dz j(-zq;q^2) at z=1 = 0", |n| {
            Ok(compare(&theta_slope(0, -1, 1, 1, 2, n)?, &zero(n)))
        }),
        case("theta-slope-z6q-base3", Derivative, Jet, "d/dz z^{-1} j(z^6 q;q^3) at z=1 = -J1^4/J3 - 9q J9^3 J1/J3", |n| {
            Ok(compare(&theta_slope(1, 1, 6, 1, 3, n)?, &u3_j1_cubed(n).neg()))
        }),
        case("theta-slope-minus-z6q-base3", Derivative, Jet, "d/dz z^{-1} j(-z^6 q;q^3) at z=1 = -J1^5/J2^2", |n| {
            Ok(compare(&theta_slope(1, -1, 6, 1, 3, n)?, &eta_r(-1, 1, 0, &[(1, 5), (2, -2)], n)))
        }),
        case("theta-slope-z4q-base4", Derivative, Jet, "d/dz z^{-1} j(z^4 q;q^4) at z=1 = -J2^9/(J4^3 J1^3)", |n| {
            Ok(compare(&theta_slope(1, 1, 4, 1, 4, n)?, &eta_r(-1, 1, 0, &[(2, 9), (4, -3), (1, -3)], n)))
        }),
        case("theta-slope-minus-z4q-base4", Derivative, Jet, "d/dz z^{-1} j(-z^4 q;q^4) at z=1 = -J1^3", |n| {
            Ok(compare(&theta_slope(1, -1, 4, 1, 4, n)?, &eta_r(-1, 1, 0, &[(1, 3)], n)))
        }),
        case("theta-slope-z3q-base6", Derivative, Jet, "d/dz z^{-1} j(z^3 q;q^6) at z=1 = -J2^5/J1^2", |n| {
            Ok(compare(&theta_slope(1, 1, 3, 1, 6, n)?, &eta_r(-1, 1, 0, &[(2, 5), (1, -2)], n)))
        }),
        case("theta-slope-minus-z3q-base6", Derivative, Jet, "d/dz z^{-1} j(-z^3 q;q^6) at z=1 = -J4^2 J1^2/J2", |n| {
            Ok(compare(&theta_slope(1, -1, 3, 1, 6, n)?, &eta_r(-1, 1, 0, &[(4, 2), (1, 2), (2, -1)], n)))
        }),
        case(
            "theta-slope-minus-z12q5-base12",
            Derivative,
            Jet,
            "d/dz z^{-1} j(-z^12 q^5;q^12) at z=1 = -(J1^4/J3 + 9q J9^3 J1/J3 + J1^5/J2^2)/2",
            |n| {
                let want = u3_j1_cubed(n).add(&eta_r(1, 1, 0, &[(1, 5), (2, -2)], n)).scale(&rat(-1, 2));
                Ok(compare(&theta_slope(1, -1, 12, 5, 12, n)?, &want))
            },
        ),
        case(
            "theta-slope-minus-z12q-base12",
            Derivative,
            Jet,
            "d/dz z^{-5} j(-z^12 q;q^12) at z=1 = -(J1^4/(q J3) + 9 J9^3 J1/J3 - J1^5/(q J2^2))/2",
            |n| {
                let want = eta_r(1, 1, -1, &[(1, 4), (3, -1)], n)
                    .add(&eta_r(9, 1, 0, &[(9, 3), (1, 1), (3, -1)], n))
                    .sub(&eta_r(1, 1, -1, &[(1, 5), (2, -2)], n))
                    .scale(&rat(-1, 2));
                Ok(compare(&theta_slope(5, -1, 12, 1, 12, n)?, &want))
            },
        ),
        case(
            "theta-slope-z12q5-base12",
            Derivative,
            Jet,
            "d/dz z^{-1} j(z^12 q^5;q^12) at z=1 = -(J12 J3 J2^12/(J6^3 J4^4 J1^4) - 9q J18^9 J12 J3 J2^3/(J36^3 J9^3 J6^3 J4 J1) + J2^13/(J4^5 J1^5))/2",
            |n| {
                let want = p125_a(-1, 2, 0, n).add(&p125_b(9, 2, 1, n)).add(&p125_c(-1, 2, 0, n));
                Ok(compare(&theta_slope(1, 1, 12, 5, 12, n)?, &want))
            },
        ),
        case(
            "theta-slope-z12q-base12",
            Derivative,
            Jet,
            "d/dz z^{-5} j(z^12 q;q^12) at z=1 = (J12 J3 J2^12/(q J6^3 J4^4 J1^4) - 9 J18^9 J12 J3 J2^3/(J36^3 J9^3 J6^3 J4 J1) - J2^13/(q J4^5 J1^5))/2",
            |n| {
                let want = p125_a(1, 2, -1, n).add(&p125_b(-9, 2, 0, n)).add(&p125_c(-1, 2, -1, n));
                Ok(compare(&theta_slope(5, 1, 12, 1, 12, n)?, &want))
            },
        ),
        case("theta-slope-minus-z2-base1", Derivative, Jet, "d/dz z^{-1} j(-z^2;q) at z=1 = 0", |n| {
            Ok(compare(&theta_slope(1, -1, 2, 0, 1, n)?, &zero(n)))
        }),
        case(
            "twelfth-theta-quotient-slope",
            Derivative,
            Jet,
            "d/dz j(z^2/q;q^6) j(z^2;q^6)/(j(-z^2/q;q^6) j(-z^2;q^6)) at z=1 = J6^7 J4 J1^2/(J12^3 J3^2 J2^3)",
            |n| {
                let got = derivative(n, |w| {
                    let num = j(1, 2, -1, 6, w)?.mul(&j(1, 2, 0, 6, w)?);
                    let den = j(-1, 2, -1, 6, w)?.mul(&j(-1, 2, 0, 6, w)?);
                    num.div(&den)
                })?;
                Ok(compare(&got, &eta_r(1, 1, 0, &[(6, 7), (4, 1), (1, 2), (12, -3), (3, -2), (2, -3)], n)))
            },
        ),
        case(
            "twelfth-appell-slope",
            Derivative,
            Jet,
            "d/dz m(q, q^6, -z^2/q) at z=1 = -J6^12 J4^2 J1^3/(2 J12^6 J3^3 J2^5)",
            |n| {
                let got = derivative(n, |w| appell_m(&E, &Monomial::q(1), 6, &m(-1, 2, -1), w))?;
                Ok(compare(&got, &eta_r(-1, 2, 0, &[(6, 12), (4, 2), (1, 3), (12, -6), (3, -3), (2, -5)], n)))
            },
        ),
        case(
            "twelfth-theta-appell-product-slope",
            Derivative,
            Jet,
            "d/dz z^{-1} j(-z^2;q^2) m(q, q^6, -z^2/q) at z=1 = -J6^12 J4^4 J1^3/(J12^6 J3^3 J2^6)",
            |n| {
                let got = derivative(n, |w| {
                    let v = j(-1, 2, 0, 2, w)?.mul(&appell_m(&E, &Monomial::q(1), 6, &m(-1, 2, -1), w)?);
                    times(&v, -1, 0)
                })?;
                Ok(compare(&got, &eta_r(-1, 1, 0, &[(6, 12), (4, 4), (1, 3), (12, -6), (3, -3), (2, -6)], n)))
            },
        ),
        case(
            "twelfth-shifted-appell-slope",
            Derivative,
            Jet,
            "d/dz z^{-1} j(q z^4;q^2) m(-q^2/z^6, q^6, q^3 z^6) at z=1 = -J6 J1^2/(J3^2 J2) sum_k (-1)^{k-1}(6k-1) q^{3k^2}/(1+q^{6k-1})",
            |n| {
                let got = derivative(n, |w| {
                    let v = j(1, 4, 1, 2, w)?.mul(&appell_m(&E, &m(-1, -6, 2), 6, &m(1, 6, 3), w)?);
                    times(&v, -1, 0)
                })?;
                let want = eta_r(-1, 1, 0, &[(6, 1), (1, 2), (3, -2), (2, -1)], n).mul(&twelfth_appell(n)?);
                Ok(compare(&got, &want))
            },
        ),
        case(
            "twelfth-six-theta-quotient-slope",
            Derivative,
            Jet,
            "d/dz j(qz^4;q^2) j(-q^4z^4;q^6) j(q^4z^2;q^6)/(z j(-q^5z^2;q^6) j(q^3z^6;q^6) j(-q^5;q^6) j(q^5z^4;q^6)) at z=1 = -J6^9 J4^4 J1^3/(J12^6 J3^3 J2^6) - 2q J12 J2^4/(J6 J4 J3^2)",
            |n| {
                let got = derivative(n, |w| {
                    let num = j(1, 4, 1, 2, w)?.mul(&j(-1, 4, 4, 6, w)?).mul(&j(1, 2, 4, 6, w)?);
                    let den = j(-1, 2, 5, 6, w)?.mul(&j(1, 6, 3, 6, w)?).mul(&j(-1, 0, 5, 6, w)?).mul(&j(1, 4, 5, 6, w)?);
                    times(&num.div(&den)?, -1, 0)
                })?;
                let want = eta_r(-1, 1, 0, &[(6, 9), (4, 4), (1, 3), (12, -6), (3, -3), (2, -6)], n)
                    .add(&eta_r(-2, 1, 1, &[(12, 1), (2, 4), (6, -1), (4, -1), (3, -2)], n));
                Ok(compare(&got, &want))
            },
        ),
        case(
            "twelfth-hecke-rogers-slope",
            Derivative,
            Jet,
            "d/dz q z^3 f121(q^3 z^4, -q^4 z^2, q^2) at z=1 = sum_{1-|n|<=j<=|n|} sg(n)(-1)^{j-1}(4n-1) q^{4n^2-2n-3j^2+2j}",
            |n| {
                let got = derivative(n, |w| times(&f_abc(&E, (1, 2, 1), &m(1, 4, 3), &m(-1, 2, 4), 2, w)?, 3, 1))?;
                let want = to_rational(&hecke_rogers("F12").expect("registered").evaluate(&Integral, n)?);
                Ok(compare(&got, &want))
            },
        ),
        case(
            "twenty-fourth-theta-quotient-slope",
            Derivative,
            Jet,
            "slope at z=1 of the two-part theta quotient built from j(-qz^4;q^12), j(q^14z^8;q^24), j(q^5z^8;q^12) = -2q J12^3 J3^2 J2^5/(J6^4 J4 J1)",
            |n| {
                let got = derivative(n, quotient24)?;
                Ok(compare(&got, &eta_r(-2, 1, 1, &[(12, 3), (3, 2), (2, 5), (6, -4), (4, -1), (1, -1)], n)))
            },
        ),
        case(
            "twenty-fourth-hecke-rogers-slope",
            Derivative,
            Jet,
            "d/dz [z j(qz^4;q^2)(m(-q^5z^12,q^12,1/(qz^4)) - m(-1/(qz^12),q^12,qz^4)/(q^2z^8)) - Theta part] at z=1 = sum_{1-|n|<=j<=|n|} sg(n)(-1)^{n-1}(4j-1) q^{3n^2-n-2j^2+j}",
            |n| {
                let got = derivative(n, |w| {
                    let a = appell_m(&E, &m(-1, 12, 5), 12, &m(1, -4, -1), w)?;
                    let b = times(&appell_m(&E, &m(-1, -12, -1), 12, &m(1, 4, 1), w)?, -8, -2)?;
                    let g1 = times(&j(1, 4, 1, 2, w)?.mul(&a.sub(&b)), 1, 0)?;
                    Ok(g1.sub(&quotient24_first(w)?))
                })?;
                let hr = to_rational(&hecke_rogers("F24").expect("registered").evaluate(&Integral, n)?);
                Ok(compare(&got, &hr))
            },
        ),
    ]
}
