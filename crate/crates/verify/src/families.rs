//! Named indefinite theta and Appell-type sums.

use hurwitz_core::mock_theta::{AppellRhsSpec, HeckeRogersSpec, KRange, Region, SignFactor, ZPart};

/// `n^2 - j(j-1)/2`
const TRI: ([i64; 6], i64) = ([2, 0, -1, 0, 1, 0], 2);
/// `2n^2 - n - j^2 + j`
const EIGHT: ([i64; 6], i64) = ([2, 0, -1, -1, 1, 0], 1);
/// `4n^2 - 2n - 3j^2 + 2j`
const TWELVE: ([i64; 6], i64) = ([4, 0, -3, -2, 2, 0], 1);
/// `3n^2 - n - 2j^2 + j`
const TWENTY_FOUR: ([i64; 6], i64) = ([3, 0, -2, -1, 1, 0], 1);

fn hr(region: Region, (quad, den): ([i64; 6], i64)) -> HeckeRogersSpec {
    HeckeRogersSpec::new(region, quad, den)
}

/// Names accepted by [`hecke_rogers`].
pub const HECKE_ROGERS: [&str; 11] =
    ["F4", "V1", "F8", "A", "F12", "sigma", "F24", "phi-", "psi", "F8z", "F4z"];

/// The indefinite theta sum for a named series.
pub fn hecke_rogers(name: &str) -> Option<HeckeRogersSpec> {
    use SignFactor::*;
    Some(match name {
        "F4" => hr(Region::PosQuad, TRI).sign(NPlusTriangularJ).weight(0, 1, 0),
        "V1" => hr(Region::PosQuad, TRI).sign(KroneckerN),
        "F8" => hr(Region::JinN, EIGHT).sign(Sg).sign(JMinusOne).weight(-1, 0, 2),
        "A" => hr(Region::JinN, EIGHT).sign(Sg).sign(NMinusOne),
        "F12" => hr(Region::Sym, TWELVE).sign(Sg).sign(JMinusOne).weight(-1, 4, 0),
        "sigma" => hr(Region::Sym, TWELVE).sign(Sg).sign(JMinusOne),
        "F24" => hr(Region::Sym, TWENTY_FOUR).sign(Sg).sign(NMinusOne).weight(-1, 0, 4),
        "phi-" => hr(Region::Sym, TWENTY_FOUR).sign(Sg).sign(NMinusOne),
        "psi" => hr(Region::Sym, TWENTY_FOUR).sign(Sg).sign(JMinusOne),
        "F8z" => hr(Region::JinN, EIGHT).sign(Sg).sign(JMinusOne).zpart(ZPart::GeomJ),
        "F4z" => hr(Region::PosQuad, TRI).zpart(ZPart::GeomN),
        _ => return None,
    })
}

/// Names accepted by [`appell`].
pub const APPELL: [&str; 9] = ["F4", "F8", "A", "sigma", "F12", "F24a", "F24b", "F4z", "F8z"];

/// The Appell-type sum for a named series; `F24` splits into two sums.
pub fn appell(name: &str) -> Option<AppellRhsSpec> {
    Some(match name {
        "F4" => AppellRhsSpec::new([1, 0, 0], 1, [2, -1]).weight(-1, 2).range(KRange::Positive),
        "F8" => AppellRhsSpec::new([2, 0, 0], 1, [4, -1]).weight(-1, 4),
        "A" => AppellRhsSpec::new([2, 0, 0], -1, [4, -1]),
        "sigma" => AppellRhsSpec::new([3, 0, 0], -1, [6, -1]),
        "F12" => AppellRhsSpec::new([3, 0, 0], 1, [6, -1]).weight(-1, 6),
        "F24a" => AppellRhsSpec::new([6, 0, 0], 1, [12, -1]).weight(-1, 12),
        "F24b" => AppellRhsSpec::new([6, 0, -2], 1, [12, -7]).weight(-7, 12),
        "F4z" => AppellRhsSpec::new([1, 0, 0], 1, [2, -1]).range(KRange::Positive).zpart([-1, 1, 1, 0]),
        "F8z" => AppellRhsSpec::new([2, 0, 0], 1, [4, -1]).zpart([-2, 1, 2, 0]),
        _ => return None,
    })
}
