use hurwitz_core::theta::{hm_relation_check, HmInstance, HmRelation};
use hurwitz_core::{Monomial, Result};

use super::helpers::rat;
use super::{case, Group, IdentityCase, Mode};
use crate::outcome::Outcome;

/// `(p/d) q^k`
fn mq(p: i64, d: i64, k: i64) -> Monomial {
    Monomial::new(rat(p, d), 0, k)
}

/// Argument set for the relation checks; fields unused by a relation are ignored.
struct ArgSet {
    label: &'static str,
    x: Monomial,
    y: Monomial,
    z: Monomial,
    z0: Monomial,
    z1: Monomial,
}

fn arg_sets() -> [ArgSet; 2] {
    [
        ArgSet { label: "x=2q, z=3, z0=3, z1=-1/2, y=3q^2", x: mq(2, 1, 1), y: mq(3, 1, 2), z: mq(3, 1, 0), z0: mq(3, 1, 0), z1: mq(-1, 2, 0) },
        ArgSet {
            label: "x=-q^2/2, z=5q/3, z0=5q/3, z1=7, y=5q/3",
            x: mq(-1, 2, 2),
            y: mq(5, 3, 1),
            z: mq(5, 3, 1),
            z0: mq(5, 3, 1),
            z1: mq(7, 1, 0),
        },
    ]
}

fn instance(rel: HmRelation, a: &ArgSet) -> HmInstance {
    match rel {
        HmRelation::ChangeZ => HmInstance::xz0z1(a.x.clone(), a.z0.clone(), a.z1.clone()),
        HmRelation::F121 | HmRelation::F151 => HmInstance::xy(a.x.clone(), a.y.clone()),
        _ => HmInstance::xz(a.x.clone(), a.z.clone()),
    }
}

fn check_both(rel: HmRelation, order: i64) -> Result<Outcome> {
    let mut out = Vec::new();
    for a in arg_sets() {
        out.push(Outcome::from(hm_relation_check(rel, &instance(rel, &a), order)?).at(a.label.to_string()));
    }
    Ok(Outcome::all(out))
}

fn formula(rel: HmRelation) -> &'static str {
    match rel {
        HmRelation::ZShift => "m(x,q,z) = m(x,q,qz)",
        HmRelation::Inversion => "m(x,q,z) = x^{-1} m(x^{-1},q,z^{-1})",
        HmRelation::XShiftUp => "m(qx,q,z) = 1 - x m(x,q,z)",
        HmRelation::XShiftDown => "m(x,q,z) = 1 - q^{-1}x m(x/q,q,z)",
        HmRelation::XShiftReciprocal => "m(x,q,z) = x^{-1} - x^{-1} m(qx,q,z)",
        HmRelation::ChangeZ => "m(x,q,z1) - m(x,q,z0) = z0 J1^3 j(z1/z0;q) j(x z0 z1;q)/(j(z0;q) j(z1;q) j(x z0;q) j(x z1;q))",
        HmRelation::BaseFour => {
            "m(x,q,z) = m(-qx^2,q^4,z^4) - q^{-1}x m(-x^2/q,q^4,z^4) - J2 J4 j(-xz^2;q) j(-xz^3;q)/(x j(xz;q) j(z^4;q^4) j(-qx^2z^4;q^2))"
        }
        HmRelation::F121 => "f_{1,2,1}(x,y,q) = g_{1,2,1}(x,y,q,y/x,x/y)",
        HmRelation::F151 => "f_{1,5,1}(x,y,q) = g_{1,5,1}(x,y,q,y/x,x/y) - Theta_{1,4}(x,y,q)",
    }
}

pub(super) fn cases() -> Vec<IdentityCase> {
    HmRelation::ALL
        .into_iter()
        .map(|rel| {
            let c = case(rel.name(), Group::Relations, Mode::NumericZ, formula(rel), move |n| check_both(rel, n));
            match rel {
                HmRelation::F121 => c.order(30),
                HmRelation::F151 => c.order(30).allow_fail(),
                _ => c.order(40),
            }
        })
        .collect()
}

