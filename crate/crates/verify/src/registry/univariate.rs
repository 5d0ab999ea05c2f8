use num_bigint::BigInt;

use hurwitz_core::class_numbers::hurwitz12;
use hurwitz_core::mock_theta::{c_n, eulerian, humbert_series, Eulerian};
use hurwitz_core::{Integral, QSeries, SeriesError};

use super::helpers::{eta, f_series, IntSeries};
use super::{case, Group, IdentityCase, Mode};
use crate::families::{appell, hecke_rogers};
use crate::outcome::{compare, compare_mod, Outcome};

fn hr_sum(name: &str, order: i64) -> hurwitz_core::Result<IntSeries> {
    hecke_rogers(name).expect("registered family").evaluate(&Integral, order)
}

fn appell_sum(name: &str, order: i64) -> hurwitz_core::Result<IntSeries> {
    appell(name).expect("registered family").evaluate(&Integral, order)
}

pub(super) fn cases() -> Vec<IdentityCase> {
    use Group::{AppellLerch, HeckeRogers, Humbert};
    use Mode::Univariate;
    vec![
        case("humbert-double-sum", Humbert, Univariate, "sum_{m>=0} sum_{|u|<=m} q^{(m+1)^2-u^2}/(1-q^{2m+1}) = sum F(4n-1) q^n", |n| {
            Ok(compare(&humbert_series(n), &f_series(4, -1, n)?))
        }),
        // Appell-Lerch forms
        case("f4-appell-lerch", AppellLerch, Univariate, "J1^2/J2 F(4n-1) = sum_{k>=1} (-1)^{k-1}(2k-1) q^{k^2}/(1+q^{2k-1})", |n| {
            let lhs = eta(1, 0, &[(1, 2), (2, -1)], n).mul(&f_series(4, -1, n)?);
            Ok(compare(&lhs, &appell_sum("F4", n)?))
        }),
        case("f8-appell-lerch", AppellLerch, Univariate, "J2^2/J4 F(8n-1) = sum_k (-1)^{k-1}(4k-1) q^{2k^2}/(1+q^{4k-1})", |n| {
            let lhs = eta(1, 0, &[(2, 2), (4, -1)], n).mul(&f_series(8, -1, n)?);
            Ok(compare(&lhs, &appell_sum("F8", n)?))
        }),
        case("a-appell-lerch", AppellLerch, Univariate, "J2^2/J4 A(q) = sum_k (-1)^{k-1} q^{2k^2}/(1-q^{4k-1})", |n| {
            let lhs = eta(1, 0, &[(2, 2), (4, -1)], n).mul(&eulerian(Eulerian::A, n));
            Ok(compare(&lhs, &appell_sum("A", n)?))
        }),
        case("sigma-appell-lerch", AppellLerch, Univariate, "J3^2/J6 sigma(q) = sum_k (-1)^{k-1} q^{3k^2}/(1-q^{6k-1})", |n| {
            let lhs = eta(1, 0, &[(3, 2), (6, -1)], n).mul(&eulerian(Eulerian::Sigma, n));
            Ok(compare(&lhs, &appell_sum("sigma", n)?))
        }),
        case(
            "f12-appell-lerch",
            AppellLerch,
            Univariate,
            "J3^2/J6 F(12n-1) = sum_k (-1)^{k-1}(6k-1) q^{3k^2}/(1+q^{6k-1}) + 2q J12 J6 J2^5/(J4 J1^2)",
            |n| {
                let lhs = eta(1, 0, &[(3, 2), (6, -1)], n).mul(&f_series(12, -1, n)?);
                let rhs = appell_sum("F12", n)?.add(&eta(2, 1, &[(12, 1), (6, 1), (2, 5), (4, -1), (1, -2)], n));
                Ok(compare(&lhs, &rhs))
            },
        ),
        case(
            "f24-appell-lerch",
            AppellLerch,
            Univariate,
            "J6^2/J12 F(24n-1) = sum_k (-1)^{k-1}(12k-1) q^{6k^2}/(1+q^{12k-1}) + sum_k (-1)^{k-1}(12k-7) q^{6k^2-2}/(1+q^{12k-7}) + 2q J12^2 J3^2 J2^6/(J6^2 J4 J1^3)",
            |n| {
                let lhs = eta(1, 0, &[(6, 2), (12, -1)], n).mul(&f_series(24, -1, n)?);
                let rhs = appell_sum("F24a", n)?
                    .add(&appell_sum("F24b", n)?)
                    .add(&eta(2, 1, &[(12, 2), (3, 2), (2, 6), (6, -2), (4, -1), (1, -3)], n));
                Ok(compare(&lhs, &rhs))
            },
        ),
        // Hecke-Rogers forms
        case("f4-hecke-rogers", HeckeRogers, Univariate, "J1 J4/J2 F(4n-1) = sum_{1<=j<=n} (-1)^{n-1+j(j-1)/2} n q^{n^2-j(j-1)/2}", |n| {
            let lhs = eta(1, 0, &[(1, 1), (4, 1), (2, -1)], n).mul(&f_series(4, -1, n)?);
            Ok(compare(&lhs, &hr_sum("F4", n)?))
        }),
        case("v1-hecke-rogers", HeckeRogers, Univariate, "J1 J4/J2 V1(q) = sum_{1<=j<=n} (-4/n) q^{n^2-j(j-1)/2}", |n| {
            let lhs = eta(1, 0, &[(1, 1), (4, 1), (2, -1)], n).mul(&eulerian(Eulerian::V1, n));
            Ok(compare(&lhs, &hr_sum("V1", n)?))
        }),
        case("f8-hecke-rogers", HeckeRogers, Univariate, "J1^2/J2 F(8n-1) = sum_{1<=j<=|n|} sg(n)(-1)^{j-1}(2j-1) q^{2n^2-n-j^2+j}", |n| {
            let lhs = eta(1, 0, &[(1, 2), (2, -1)], n).mul(&f_series(8, -1, n)?);
            Ok(compare(&lhs, &hr_sum("F8", n)?))
        }),
        case("a-hecke-rogers", HeckeRogers, Univariate, "J1^2/J2 A(q) = sum_{1<=j<=|n|} sg(n)(-1)^{n-1} q^{2n^2-n-j^2+j}", |n| {
            let lhs = eta(1, 0, &[(1, 2), (2, -1)], n).mul(&eulerian(Eulerian::A, n));
            Ok(compare(&lhs, &hr_sum("A", n)?))
        }),
        case(
            "f12-hecke-rogers",
            HeckeRogers,
            Univariate,
            "J1^2/J2 F(12n-1) = sum_{1-|n|<=j<=|n|} sg(n)(-1)^{j-1}(4n-1) q^{4n^2-2n-3j^2+2j}",
            |n| {
                let lhs = eta(1, 0, &[(1, 2), (2, -1)], n).mul(&f_series(12, -1, n)?);
                Ok(compare(&lhs, &hr_sum("F12", n)?))
            },
        ),
        case("sigma-hecke-rogers", HeckeRogers, Univariate, "J1^2/J2 sigma(q) = sum_{1-|n|<=j<=|n|} sg(n)(-1)^{j-1} q^{4n^2-2n-3j^2+2j}", |n| {
            let lhs = eta(1, 0, &[(1, 2), (2, -1)], n).mul(&eulerian(Eulerian::Sigma, n));
            Ok(compare(&lhs, &hr_sum("sigma", n)?))
        }),
        case(
            "f24-hecke-rogers",
            HeckeRogers,
            Univariate,
            "J1^2/J2 F(24n-1) = sum_{1-|n|<=j<=|n|} sg(n)(-1)^{n-1}(4j-1) q^{3n^2-n-2j^2+j}",
            |n| {
                let lhs = eta(1, 0, &[(1, 2), (2, -1)], n).mul(&f_series(24, -1, n)?);
                Ok(compare(&lhs, &hr_sum("F24", n)?))
            },
        ),
        case("phi-minus-hecke-rogers", HeckeRogers, Univariate, "J1^2/J2 phi-(q) = sum_{1-|n|<=j<=|n|} sg(n)(-1)^{n-1} q^{3n^2-n-2j^2+j}", |n| {
            let lhs = eta(1, 0, &[(1, 2), (2, -1)], n).mul(&eulerian(Eulerian::PhiMinus, n));
            Ok(compare(&lhs, &hr_sum("phi-", n)?))
        }),
        case("shifted-theta-constant", HeckeRogers, Univariate, "C_m = sum_k q^{(2k-m)(2k+1-m)/2} = J2^2/J1 for 0 <= m <= 10", |n| {
            let want = eta(1, 0, &[(2, 2), (1, -1)], n);
            Ok(Outcome::all((0..=10).map(|m| compare(&c_n(m, n), &want).at(format!("m = {m}")))))
        })
        .order(60),
        // congruences
        case("f8-minus-a-mod-4", Group::Congruence, Mode::Congruence(4), "F(8n-1) generating function = -A(-q) mod 4", |n| {
            Ok(compare_mod(&f_series(8, -1, n)?, &eulerian(Eulerian::A, n).neg_q().neg(), 4))
        }),
        case("f12-minus-sigma-mod-4", Group::Congruence, Mode::Congruence(4), "F(12n-1) generating function = -sigma(q) mod 4", |n| {
            Ok(compare_mod(&f_series(12, -1, n)?, &eulerian(Eulerian::Sigma, n).neg(), 4))
        }),
        case("f24-minus-phi-minus-mod-4", Group::Congruence, Mode::Congruence(4), "F(24n-1) generating function = -phi-(q) mod 4", |n| {
            Ok(compare_mod(&f_series(24, -1, n)?, &eulerian(Eulerian::PhiMinus, n).neg(), 4))
        }),
        case("a-coefficients-hurwitz-mod-4", Group::Congruence, Mode::Congruence(4), "N_A(n) = (-1)^{n+1} H(8n-1) mod 4", |n| {
            let mut terms = Vec::new();
            for k in 1..=n {
                let h12 = hurwitz12((8 * k - 1) as u64);
                if h12 % 12 != 0 {
                    return Err(SeriesError::NonIntegral(format!("H({}) = {h12}/12", 8 * k - 1)));
                }
                let s = if k % 2 == 1 { 1 } else { -1 };
                terms.push((k, BigInt::from(s * h12 / 12)));
            }
            Ok(compare_mod(&eulerian(Eulerian::A, n), &QSeries::from_terms(terms, n), 4))
        }),
    ]
}
