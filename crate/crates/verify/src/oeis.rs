//! Comparison of the enumerators against OEIS b-files.

use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;

use hurwitz_core::combinatorics::{count_p, count_q};

use crate::error::{Result, VerifyError};
use crate::outcome::Outcome;
use crate::report::VerificationReport;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sequence {
    /// Strongly unimodal compositions with successive parts differing by 1.
    A238872,
    /// Partitions into consecutive parts, all singletons except the largest.
    A321440,
}

impl FromStr for Sequence {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A238872" => Ok(Sequence::A238872),
            "A321440" => Ok(Sequence::A321440),
            _ => Err(VerifyError::UnknownSequence(s.to_string())),
        }
    }
}

impl Sequence {
    pub fn name(self) -> &'static str {
        match self {
            Sequence::A238872 => "A238872",
            Sequence::A321440 => "A321440",
        }
    }

    /// The enumerated term; both sequences are 0 at `n = 0`.
    pub fn term(self, n: i64) -> Result<u64> {
        if n == 0 {
            return Ok(0);
        }
        Ok(match self {
            Sequence::A238872 => count_p(n)?,
            Sequence::A321440 => count_q(n)?,
        })
    }
}

/// Parses two whitespace-separated integer columns; blank lines and `#` comments are skipped.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| VerifyError::BFile { line: i + 1, msg };
        let cols: Vec<&str> = line.split_whitespace().collect();
        if cols.len() != 2 {
            return Err(bad(format!("expected 2 columns, found {}", cols.len())));
        }
        let n = cols[0].parse::<i64>().map_err(|_| bad(format!("index `{}` is not an integer", cols[0])))?;
        let v = cols[1].parse::<BigInt>().map_err(|_| bad(format!("value `{}` is not an integer", cols[1])))?;
        out.push((n, v));
    }
    Ok(out)
}

pub fn read_bfile(path: &Path) -> Result<Vec<(i64, BigInt)>> {
    let text = std::fs::read_to_string(path).map_err(|source| VerifyError::Io { path: path.to_path_buf(), source })?;
    parse_bfile(&text)
}

/// Checks every entry with `0 <= n <= max`; the report id is the sequence name.
pub fn compare(seq: Sequence, entries: &[(i64, BigInt)], max: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut outcome = Outcome::pass(-1);
    for (n, v) in entries.iter().filter(|(n, _)| (0..=max).contains(n)) {
        let got = BigInt::from(seq.term(*n)?);
        if &got != v {
            outcome = Outcome::fail(*n, got.to_string(), v.to_string()).at("b-file");
            break;
        }
        outcome.certified_order = outcome.certified_order.max(*n);
    }
    Ok(VerificationReport::from_outcome(seq.name(), outcome, start.elapsed().as_millis() as u64, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let e = parse_bfile("# header\n1 1\n\n2 0  # trailing\n3 2\n").unwrap();
        assert_eq!(e, vec![(1, 1.into()), (2, 0.into()), (3, 2.into())]);
    }

    #[test]
    fn bad_token_reports_line() {
        match parse_bfile("1 1\n2 x\n") {
            Err(VerifyError::BFile { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_bfile("1 2 3\n"), Err(VerifyError::BFile { line: 1, .. })));
    }

    #[test]
    fn sequence_names() {
        assert_eq!("a238872".parse::<Sequence>().unwrap(), Sequence::A238872);
        assert!("A000001".parse::<Sequence>().is_err());
    }

    #[test]
    fn mismatch_is_located() {
        let entries = vec![(1, 1.into()), (2, 1.into()), (3, 5.into())];
        let r = compare(Sequence::A238872, &entries, 10).unwrap();
        assert_eq!(r.first_mismatch.unwrap().exp, 3);
        assert_eq!(r.certified_order, 2);
    }
}
