use hurwitz_core::class_numbers::genfun_h;
use hurwitz_core::combinatorics::{
    f8_sign_region_series, humbert_series, humbert_unfolded, p_series, q_series, q_sign_region_series,
    unimodal_symmetry_holds, Method,
};

use super::helpers::{compare_ir, f_series};
use super::{case, Group, IdentityCase, Mode};
use crate::outcome::{compare, Outcome};

pub(super) fn cases() -> Vec<IdentityCase> {
    use Group::Combinatorics;
    use Mode::Univariate;
    vec![
        case("p-equals-f4", Combinatorics, Univariate, "P(n) = F(4n-1), P counted by enumeration", |n| {
            Ok(compare(&p_series(n, Method::Direct)?, &f_series(4, -1, n)?))
        })
        .order(300),
        case("q-equals-h8", Combinatorics, Univariate, "Q(n) = H(8n-1), Q counted by enumeration", |n| {
            Ok(compare_ir(&q_series(n, Method::Direct)?, &genfun_h(8, -1, n)?))
        })
        .order(300),
        case("q-equals-p-even", Combinatorics, Univariate, "Q(n) = P(2n)", |n| {
            let p = p_series(2 * n + 1, Method::Direct)?.u_p(2).truncate(n);
            Ok(compare(&q_series(n, Method::Direct)?, &p))
        })
        .order(150),
        case("p-formula-vs-enumeration", Combinatorics, Univariate, "sum_{1<=x,z<=y} q^{y^2-x(x-1)/2-z(z-1)/2} = sum P(n) q^n", |n| {
            Ok(compare(&p_series(n, Method::Formula)?, &p_series(n, Method::Direct)?))
        }),
        case(
            "q-formula-vs-enumeration",
            Combinatorics,
            Univariate,
            "sum_{1<=m<=l} q^{l(l+1)/2-m(m-1)/2}/(1-q^l) = sum Q(n) q^n",
            |n| Ok(compare(&q_series(n, Method::Formula)?, &q_series(n, Method::Direct)?)),
        ),
        case("humbert-unfolded", Combinatorics, Univariate, "unfolding each geometric row of the Humbert sum gives the same series", |n| {
            Ok(compare(&humbert_unfolded(n), &humbert_series(n)))
        })
        .order(60),
        case("unimodal-exponent-symmetry", Combinatorics, Univariate, "B(y,x,z) = B(y,x,1-z) = B(y,1-x,z) for B = y^2-x(x-1)/2-z(z-1)/2", |_| {
            Ok(if unimodal_symmetry_holds() {
                Outcome::pass(0)
            } else {
                Outcome::fail(0, "B(y,x,z)", "B reflected")
            })
        }),
        case(
            "q-sign-region-form",
            Combinatorics,
            Univariate,
            "q sum_{sg(s)=sg(t)} sg(s) q^{2st+2s+t}/(1-q^{2(s+t)+2}) = sum Q(n) q^n",
            |n| Ok(compare(&q_sign_region_series(n)?, &q_series(n, Method::Direct)?)),
        ),
        case(
            "f8-sign-region-form",
            Combinatorics,
            Univariate,
            "q sum_{sg(s)=sg(t)} sg(s) q^{2st+2s+2t}/(1-q^{2(s+t)+1}) = sum F(8n-1) q^n",
            |n| Ok(compare(&f8_sign_region_series(n)?, &f_series(8, -1, n)?)),
        ),
    ]
}
