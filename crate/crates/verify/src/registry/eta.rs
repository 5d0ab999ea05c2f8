use num_bigint::BigInt;

use hurwitz_core::class_numbers::genfun_h;
use hurwitz_core::products::etaq;
use hurwitz_core::theta::jtheta;
use hurwitz_core::{Integral, Monomial, QSeries, Result};

use super::helpers::{compare_ir, eta, eta_r, f_series, IntSeries};
use super::{case, Group, IdentityCase, Mode};
use crate::families::appell;
use crate::outcome::{compare, Outcome};

/// Components `f_i` of `f(q) = sum_i q^i f_i(q^3)` through order `n`.
fn trisect(build: impl Fn(i64) -> Result<IntSeries>, n: i64) -> Result<Vec<IntSeries>> {
    Ok(build(3 * n + 2)?.dissect(3).into_iter().map(|c| c.truncate(n)).collect())
}

fn check_components(parts: &[IntSeries], want: &[IntSeries]) -> Outcome {
    Outcome::all(parts.iter().zip(want).enumerate().map(|(i, (p, w))| compare(p, w).at(format!("component {i}"))))
}

fn appell_sum(name: &str, n: i64) -> Result<IntSeries> {
    appell(name).expect("registered family").evaluate(&Integral, n)
}

pub(super) fn cases() -> Vec<IdentityCase> {
    use Group::{Dissection, EtaQuotient};
    use Mode::Univariate;
    vec![
        case("u3-of-j1-cubed", EtaQuotient, Univariate, "U_3(J1^3) = J1^4/J3 + 9q J9^3 J1/J3", |n| {
            let lhs = etaq(1, 3 * n + 2).pow(3).u_p(3).truncate(n);
            let rhs = eta(1, 0, &[(1, 4), (3, -1)], n).add(&eta(9, 1, &[(9, 3), (1, 1), (3, -1)], n));
            Ok(compare(&lhs, &rhs))
        }),
        case("j1-cubed-jacobi", EtaQuotient, Univariate, "J1^3 = sum_{n>=1} (-1)^{n-1}(2n-1) q^{n(n-1)/2}", |n| {
            let terms = (1..).map(|k: i64| (k * (k - 1) / 2, k)).take_while(|(e, _)| *e <= n);
            let rhs = QSeries::from_terms(terms.map(|(e, k)| (e, BigInt::from(if k % 2 == 1 { 2 * k - 1 } else { 1 - 2 * k }))), n);
            Ok(compare(&etaq(1, n).pow(3), &rhs))
        }),
        case("f12-7-eta-quotient", EtaQuotient, Univariate, "sum F(12n+7) q^n = J12 J3 J2^6/(J6 J4 J1^3)", |n| {
            Ok(compare(&f_series(12, 7, n)?, &eta(1, 0, &[(12, 1), (3, 1), (2, 6), (6, -1), (4, -1), (1, -3)], n)))
        }),
        case(
            "f12-7-two-eta-forms",
            EtaQuotient,
            Univariate,
            "J6^2 J4^5/(J12 J2^3) + 3q J12^3 J4/J2 = J12 J3 J2^6/(J6 J4 J1^3)",
            |n| {
                let lhs = eta(1, 0, &[(6, 2), (4, 5), (12, -1), (2, -3)], n).add(&eta(3, 1, &[(12, 3), (4, 1), (2, -1)], n));
                Ok(compare(&lhs, &eta(1, 0, &[(12, 1), (3, 1), (2, 6), (6, -1), (4, -1), (1, -3)], n)))
            },
        ),
        case("h24-7-eta-quotient", EtaQuotient, Univariate, "sum_{n>=0} H(24n+7) q^n = J3^2 J2^5/(J6 J1^3)", |n| {
            Ok(compare_ir(&eta(1, 0, &[(3, 2), (2, 5), (6, -1), (1, -3)], n), &genfun_h(24, 7, n)?))
        }),
        case(
            "twelfth-quotient-slope-eta-target",
            EtaQuotient,
            Univariate,
            "2J6 J2^2 J1^3/(3J12^2 J3^3) + J6^3 J4^3 J1^3/(J12^3 J3^3 J2^4) (J2^3/(3J6) + 3q^2 J18^3/J6) - 2J6^4 J4^6 J1^6/(3J12^4 J3^4 J2^7) - 4J6 J4^3 J2^2/(3J12^3 J3^2) = -J6^9 J4^4 J1^3/(J12^6 J3^3 J2^6) - 2q J12 J2^4/(J6 J4 J3^2)",
            |n| {
                let lhs = eta_r(2, 3, 0, &[(6, 1), (2, 2), (1, 3), (12, -2), (3, -3)], n)
                    .add(&eta_r(1, 3, 0, &[(6, 2), (4, 3), (1, 3), (12, -3), (3, -3), (2, -1)], n))
                    .add(&eta_r(3, 1, 2, &[(6, 2), (4, 3), (1, 3), (12, -3), (3, -3), (2, -4), (18, 3)], n))
                    .sub(&eta_r(2, 3, 0, &[(6, 4), (4, 6), (1, 6), (12, -4), (3, -4), (2, -7)], n))
                    .sub(&eta_r(4, 3, 0, &[(6, 1), (4, 3), (2, 2), (12, -3), (3, -2)], n));
                let rhs = eta_r(-1, 1, 0, &[(6, 9), (4, 4), (1, 3), (12, -6), (3, -3), (2, -6)], n)
                    .add(&eta_r(-2, 1, 1, &[(12, 1), (2, 4), (6, -1), (4, -1), (3, -2)], n));
                Ok(compare(&lhs, &rhs))
            },
        ),
        case("theta-minus-one-base-two", EtaQuotient, Univariate, "j(-1;q^2) = 2 J4^2/J2", |n| {
            let lhs = jtheta(&Integral, &Monomial::signed(-1, 0, 0), 2, n)?;
            Ok(compare(&lhs, &eta(2, 0, &[(4, 2), (2, -1)], n)))
        }),
        // 3-dissections
        case(
            "j1-squared-over-j2-trisection",
            Dissection,
            Univariate,
            "J1^2/J2 = A0(q^3) + q A1(q^3) + q^2 A2(q^3) with A0 = J3^2/J6, A1 = -2J6^2 J1/(J3 J2), A2 = 0",
            |n| {
                let parts = trisect(|w| Ok(eta(1, 0, &[(1, 2), (2, -1)], w)), n)?;
                let want = [eta(1, 0, &[(3, 2), (6, -1)], n), eta(-2, 0, &[(6, 2), (1, 1), (3, -1), (2, -1)], n), QSeries::zero(n)];
                Ok(check_components(&parts, &want))
            },
        ),
        case("j1-squared-over-j2-nine-split", Dissection, Univariate, "J1^2/J2 = J9^2/J18 - 2q J18^2 J3/(J9 J6)", |n| {
            let rhs = eta(1, 0, &[(9, 2), (18, -1)], n).sub(&eta(2, 1, &[(18, 2), (3, 1), (9, -1), (6, -1)], n));
            Ok(compare(&eta(1, 0, &[(1, 2), (2, -1)], n), &rhs))
        }),
        case(
            "j2-squared-over-j4-trisection",
            Dissection,
            Univariate,
            "J2^2/J4 = A0(q^3) + q A1(q^3) + q^2 A2(q^3) with A0 = J6^2/J12, A1 = 0, A2 = -2J12^2 J2/(J6 J4)",
            |n| {
                let parts = trisect(|w| Ok(eta(1, 0, &[(2, 2), (4, -1)], w)), n)?;
                let want = [eta(1, 0, &[(6, 2), (12, -1)], n), QSeries::zero(n), eta(-2, 0, &[(12, 2), (2, 1), (6, -1), (4, -1)], n)];
                Ok(check_components(&parts, &want))
            },
        ),
        case("f4-trisection-component-two", Dissection, Univariate, "q^2-component of the 3-dissection of sum F(4n-1) q^n = sum F(12n+7) q^n", |n| {
            let parts = trisect(|w| f_series(4, -1, w), n)?;
            Ok(compare(&parts[2], &f_series(12, 7, n)?))
        }),
        case(
            "f8-trisection-component-one",
            Dissection,
            Univariate,
            "q-component of the 3-dissection of sum F(8n-1) q^n = sum F(24n+7) q^n = sum H(24n+7) q^n",
            |n| {
                let parts = trisect(|w| f_series(8, -1, w), n)?;
                Ok(compare(&parts[1], &f_series(24, 7, n)?).and(compare_ir(&parts[1], &genfun_h(24, 7, n)?)))
            },
        ),
        case(
            "f4-appell-trisection-component-zero",
            Dissection,
            Univariate,
            "constant component of the 3-dissection of sum_{k>=1} (-1)^{k-1}(2k-1) q^{k^2}/(1+q^{2k-1}) = sum_k (-1)^{k-1}(6k-1) q^{3k^2}/(1+q^{6k-1})",
            |n| {
                let parts = trisect(|w| appell_sum("F4", w), n)?;
                Ok(compare(&parts[0], &appell_sum("F12", n)?))
            },
        ),
        case(
            "f8-appell-trisection-component-zero",
            Dissection,
            Univariate,
            "constant component of the 3-dissection of sum_k (-1)^{k-1}(4k-1) q^{2k^2}/(1+q^{4k-1}) = the two twenty-fourth-order Appell sums",
            |n| {
                let parts = trisect(|w| appell_sum("F8", w), n)?;
                Ok(compare(&parts[0], &appell_sum("F24a", n)?.add(&appell_sum("F24b", n)?)))
            },
        ),
    ]
    .into_iter()
    .map(|c| c.order(150))
    .collect()
}

