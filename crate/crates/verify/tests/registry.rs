use std::collections::HashSet;

use hurwitz_verify::registry::{find, registry, Group, Mode};
use hurwitz_verify::runner::{run, run_case, select, RunOptions};
use hurwitz_verify::{Status, VerifyError};

#[test]
fn ids_are_unique_and_plentiful() {
    let cases = registry();
    assert!(cases.len() >= 40);
    let ids: HashSet<_> = cases.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), cases.len());
    assert!(cases.iter().all(|c| !c.formula.is_empty() && c.default_order >= 0));
}

#[test]
fn every_group_is_populated() {
    let cases = registry();
    for g in [
        Group::Humbert,
        Group::Bivariate,
        Group::Specialization,
        Group::AppellLerch,
        Group::HeckeRogers,
        Group::Derivative,
        Group::EtaQuotient,
        Group::Dissection,
        Group::Relations,
        Group::Congruence,
        Group::Combinatorics,
    ] {
        assert!(cases.iter().any(|c| c.group == g), "{g:?}");
    }
}

#[test]
fn only_the_theta14_case_may_fail() {
    let allowed: Vec<_> = registry().into_iter().filter(|c| c.allow_fail).map(|c| c.id).collect();
    assert_eq!(allowed, ["f151-expansion"]);
}

#[test]
fn default_orders_follow_mode() {
    assert_eq!(Mode::Univariate.default_order(), 200);
    assert_eq!(Mode::FormalZ.default_order(), 100);
    assert_eq!(Mode::NumericZ.default_order(), 60);
    assert_eq!(Mode::Jet.default_order(), 80);
    assert_eq!(Mode::Congruence(4).default_order(), 300);
}

#[test]
fn derivative_identity_is_a_jet_case() {
    let cases = registry();
    let c = find(&cases, "theta-slope-z6q-base3").unwrap();
    assert_eq!(c.mode, Mode::Jet);
    assert!(run_case(c, Some(30)).is_pass());
    let c = find(&cases, "twenty-fourth-theta-quotient-slope").unwrap();
    assert_eq!(c.mode, Mode::Jet);
}

#[test]
fn p_equals_f_at_order_100() {
    let cases = registry();
    let r = run_case(find(&cases, "p-equals-f4").unwrap(), Some(100));
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.certified_order, 100);
}

#[test]
fn unknown_id_is_an_error() {
    let cases = registry();
    let err = select(&cases, &["no-such-id".to_string()]).unwrap_err();
    assert!(matches!(err, VerifyError::UnknownId(ref id) if id == "no-such-id"));
}

#[test]
fn passing_cases_pass_at_lower_orders() {
    let cases = registry();
    for id in ["f8-hecke-rogers", "f12-appell-lerch", "q-equals-h8", "twelfth-six-theta-quotient-slope"] {
        let c = find(&cases, id).unwrap();
        for n in [5, 17, 40] {
            let r = run_case(c, Some(n));
            assert!(r.is_pass(), "{id} at {n}");
            assert_eq!(r.certified_order, n);
        }
    }
}

#[test]
fn runs_are_deterministic_and_order_stable() {
    let cases = registry();
    let ids: Vec<String> =
        ["humbert-double-sum", "f151-expansion", "m-z-shift", "u3-of-j1-cubed", "f8-minus-a-mod-4"].map(String::from).to_vec();
    let sel = select(&cases, &ids).unwrap();
    let a = run(&sel, RunOptions { order: Some(20), jobs: 1 });
    let b = run(&sel, RunOptions { order: Some(20), jobs: 3 });
    assert_eq!(a.iter().map(|r| r.id.as_str()).collect::<Vec<_>>(), ids);
    assert!(a.iter().map(|r| r.untimed()).eq(b.iter().map(|r| r.untimed())));
}

#[test]
fn theta14_failure_is_reported_not_hidden() {
    let cases = registry();
    let r = run_case(find(&cases, "f151-expansion").unwrap(), Some(10));
    assert!(r.allow_fail);
    assert!(!r.is_blocking());
    if r.status == Status::Fail {
        assert!(r.first_mismatch.is_some());
    }
}

#[test]
fn catalogue_lists_every_case() {
    let doc = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../IDENTITIES.md")).unwrap();
    for c in registry() {
        assert!(doc.contains(&format!("`{}`", c.id)), "{} missing from IDENTITIES.md", c.id);
    }
}
