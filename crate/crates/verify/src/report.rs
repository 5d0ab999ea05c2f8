//! Per-case reports and their table, JSON and CSV renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::outcome::{Mismatch, Outcome};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    /// Every exponent up to this one agrees; `-1` when nothing was certified.
    pub certified_order: i64,
    pub first_mismatch: Option<Mismatch>,
    pub ms: u64,
    pub allow_fail: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn from_outcome(id: impl Into<String>, outcome: Outcome, ms: u64, allow_fail: bool) -> Self {
        let status = if outcome.is_pass() { Status::Pass } else { Status::Fail };
        Self { id: id.into(), status, certified_order: outcome.certified_order, first_mismatch: outcome.mismatch, ms, allow_fail, error: None }
    }

    pub fn from_error(id: impl Into<String>, err: impl ToString, ms: u64, allow_fail: bool) -> Self {
        Self {
            id: id.into(),
            status: Status::Error,
            certified_order: -1,
            first_mismatch: None,
            ms,
            allow_fail,
            error: Some(err.to_string()),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Whether this report fails the run.
    pub fn is_blocking(&self) -> bool {
        !self.is_pass() && !self.allow_fail
    }

    /// The report with timing removed, for comparing runs.
    pub fn untimed(&self) -> Self {
        Self { ms: 0, ..self.clone() }
    }

    fn detail(&self) -> String {
        match (&self.first_mismatch, &self.error) {
            (Some(m), _) => {
                let at = m.at.as_deref().map(|a| format!(" [{a}]")).unwrap_or_default();
                format!("q^{}: {} vs {}{at}", m.exp, m.lhs, m.rhs)
            }
            (None, Some(e)) => e.clone(),
            (None, None) => String::new(),
        }
    }
}

/// Output format for a batch of reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

pub fn render(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Table => table(reports),
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialize") + "\n",
        Format::Csv => csv(reports),
    }
}

fn table(reports: &[VerificationReport]) -> String {
    let w = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = format!("{:<w$}  {:<6}  {:>6}  {:>8}  detail\n", "id", "status", "order", "ms");
    for r in reports {
        let status = if r.allow_fail && !r.is_pass() { format!("{}*", r.status.as_str()) } else { r.status.as_str().to_string() };
        let _ = writeln!(out, "{:<w$}  {:<6}  {:>6}  {:>8}  {}", r.id, status, r.certified_order, r.ms, r.detail());
    }
    let passed = reports.iter().filter(|r| r.is_pass()).count();
    let _ = writeln!(out, "{passed}/{} passed", reports.len());
    if reports.iter().any(|r| r.allow_fail && !r.is_pass()) {
        out.push_str("* allowed to fail\n");
    }
    out
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    status: &'a str,
    certified_order: i64,
    mismatch_exp: Option<i64>,
    mismatch_lhs: Option<&'a str>,
    mismatch_rhs: Option<&'a str>,
    ms: u64,
    allow_fail: bool,
    error: Option<&'a str>,
}

fn csv(reports: &[VerificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        let m = r.first_mismatch.as_ref();
        w.serialize(CsvRow {
            id: &r.id,
            status: r.status.as_str(),
            certified_order: r.certified_order,
            mismatch_exp: m.map(|m| m.exp),
            mismatch_lhs: m.map(|m| m.lhs.as_str()),
            mismatch_rhs: m.map(|m| m.rhs.as_str()),
            ms: r.ms,
            allow_fail: r.allow_fail,
            error: r.error.as_deref(),
        })
        .expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failing() -> VerificationReport {
        VerificationReport::from_outcome("x", Outcome::fail(3, "1", "2"), 5, false)
    }

    #[test]
    fn json_schema() {
        let v: serde_json::Value = serde_json::from_str(&render(&[failing()], Format::Json)).unwrap();
        let r = &v[0];
        assert_eq!(r["status"], "fail");
        assert_eq!(r["certified_order"], 2);
        assert_eq!(r["first_mismatch"]["exp"], 3);
        assert_eq!(r["first_mismatch"]["lhs"], "1");
        assert!(r.get("ms").is_some());
        let ok = VerificationReport::from_outcome("y", Outcome::pass(10), 0, false);
        let v: serde_json::Value = serde_json::to_value(&ok).unwrap();
        assert!(v["first_mismatch"].is_null());
    }

    #[test]
    fn csv_has_header_and_rows() {
        let s = render(&[failing()], Format::Csv);
        let mut lines = s.lines();
        assert!(lines.next().unwrap().starts_with("id,status,certified_order"));
        assert!(lines.next().unwrap().starts_with("x,fail,2,3,1,2,5,false"));
    }

    #[test]
    fn allow_fail_is_not_blocking() {
        let mut r = failing();
        assert!(r.is_blocking());
        r.allow_fail = true;
        assert!(!r.is_blocking());
        assert!(render(&[r], Format::Table).contains("fail*"));
    }
}
