//! Parsing of `--family` specs for the `series` subcommand.

use num_rational::BigRational;

use hurwitz_core::class_numbers::{genfun_f, genfun_h};
use hurwitz_core::combinatorics::{humbert_series, p_series, q_series, Method};
use hurwitz_core::mock_theta::{eulerian, Eulerian};
use hurwitz_core::products::to_rational;
use hurwitz_core::{Integral, QSeries};

use crate::error::{Result, VerifyError};
use crate::families::{appell, hecke_rogers};

/// Accepted forms, for help text.
pub const FAMILY_HELP: &str = "F:a,b | H:a,b | eulerian:A|V1|sigma|phi- | hr:NAME | appell:NAME | humbert | P | Q";

fn pair(s: &str) -> Option<(i64, i64)> {
    let (a, b) = s.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Builds the named series through `order` with rational coefficients.
pub fn build(spec: &str, order: i64) -> Result<QSeries<BigRational>> {
    let bad = || VerifyError::UnknownFamily(spec.to_string());
    let (head, arg) = match spec.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (spec, None),
    };
    let int = match (head, arg) {
        ("F", Some(a)) => {
            let (a, b) = pair(a).ok_or_else(bad)?;
            genfun_f(a, b, order)?
        }
        ("H", Some(a)) => {
            let (a, b) = pair(a).ok_or_else(bad)?;
            return Ok(genfun_h(a, b, order)?);
        }
        ("eulerian", Some(a)) => eulerian(Eulerian::parse(a).ok_or_else(bad)?, order),
        ("hr", Some(a)) => hecke_rogers(a).ok_or_else(bad)?.evaluate(&Integral, order)?,
        ("appell", Some(a)) => appell(a).ok_or_else(bad)?.evaluate(&Integral, order)?,
        ("humbert", None) => humbert_series(order),
        ("P", None) => p_series(order, Method::Direct)?,
        ("Q", None) => q_series(order, Method::Direct)?,
        _ => return Err(bad()),
    };
    Ok(to_rational(&int))
}
