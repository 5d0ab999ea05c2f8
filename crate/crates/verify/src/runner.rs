//! Runs cases, optionally in parallel, with reports in registry order.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Result, VerifyError};
use crate::registry::{find, IdentityCase};
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Replaces every case's default order.
    pub order: Option<i64>,
    /// Worker threads; `0` or `1` runs on the calling thread.
    pub jobs: usize,
}

/// Resolves `ids` against `cases`; an empty list selects everything.
pub fn select<'a>(cases: &'a [IdentityCase], ids: &[String]) -> Result<Vec<&'a IdentityCase>> {
    if ids.is_empty() {
        return Ok(cases.iter().collect());
    }
    ids.iter().map(|id| find(cases, id).ok_or_else(|| VerifyError::UnknownId(id.clone()))).collect()
}

pub fn run_case(case: &IdentityCase, order: Option<i64>) -> VerificationReport {
    let order = order.unwrap_or(case.default_order);
    let start = Instant::now();
    let res = case.run(order);
    let ms = start.elapsed().as_millis() as u64;
    match res {
        Ok(outcome) => VerificationReport::from_outcome(case.id, outcome, ms, case.allow_fail),
        Err(e) => VerificationReport::from_error(case.id, e, ms, case.allow_fail),
    }
}

pub fn run(cases: &[&IdentityCase], opts: RunOptions) -> Vec<VerificationReport> {
    if opts.jobs <= 1 {
        return cases.iter().map(|c| run_case(c, opts.order)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().expect("thread pool");
    pool.install(|| cases.par_iter().map(|c| run_case(c, opts.order)).collect())
}

/// Process exit status for a batch: 0 when every non-allow-fail case passed.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(VerificationReport::is_blocking) {
        1
    } else {
        0
    }
}
