//! The catalogue of identities checked by the verifier.
//!
//! Every case owns a pure check closure that builds both sides at a requested
//! order and compares them exactly.

mod bivariate;
mod combinatorial;
mod eta;
mod helpers;
mod jets;
mod relations;
mod univariate;

use std::fmt;

use hurwitz_core::Result;
use serde::Serialize;

use crate::outcome::Outcome;

pub use helpers::WITNESSES;

/// How the two sides of a case are evaluated.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Integer or rational q-series.
    Univariate,
    /// Laurent-polynomial coefficients in a formal `z`.
    FormalZ,
    /// `z` specialized at each of the fixed witnesses.
    NumericZ,
    /// Value and `z`-derivative at `z = 1`.
    Jet,
    /// Equality modulo the given integer.
    Congruence(u32),
}

impl Mode {
    pub fn default_order(self) -> i64 {
        match self {
            Mode::Univariate => 200,
            Mode::FormalZ => 100,
            Mode::NumericZ => 60,
            Mode::Jet => 80,
            Mode::Congruence(_) => 300,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Univariate => write!(f, "univariate"),
            Mode::FormalZ => write!(f, "formal_z"),
            Mode::NumericZ => write!(f, "numeric_z"),
            Mode::Jet => write!(f, "jet"),
            Mode::Congruence(m) => write!(f, "congruence({m})"),
        }
    }
}

/// Thematic grouping used by reports and the acceptance suite.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Humbert,
    Bivariate,
    Specialization,
    AppellLerch,
    HeckeRogers,
    Derivative,
    EtaQuotient,
    Dissection,
    Relations,
    Congruence,
    Combinatorics,
}

type Check = Box<dyn Fn(i64) -> Result<Outcome> + Send + Sync>;

/// A named identity with its check.
pub struct IdentityCase {
    pub id: &'static str,
    pub formula: &'static str,
    pub group: Group,
    pub mode: Mode,
    pub default_order: i64,
    /// The case may fail without failing the run.
    pub allow_fail: bool,
    check: Check,
}

impl IdentityCase {
    fn new(id: &'static str, group: Group, mode: Mode, formula: &'static str, check: Check) -> Self {
        Self { id, formula, group, mode, default_order: mode.default_order(), allow_fail: false, check }
    }

    fn order(mut self, n: i64) -> Self {
        self.default_order = n;
        self
    }

    fn allow_fail(mut self) -> Self {
        self.allow_fail = true;
        self
    }

    /// Runs the check at `order`.
    pub fn run(&self, order: i64) -> Result<Outcome> {
        (self.check)(order)
    }
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("mode", &self.mode)
            .field("default_order", &self.default_order)
            .field("allow_fail", &self.allow_fail)
            .finish()
    }
}

fn case<F>(id: &'static str, group: Group, mode: Mode, formula: &'static str, check: F) -> IdentityCase
where
    F: Fn(i64) -> Result<Outcome> + Send + Sync + 'static,
{
    IdentityCase::new(id, group, mode, formula, Box::new(check))
}

/// All registered cases, in a fixed order.
pub fn registry() -> Vec<IdentityCase> {
    let mut v = Vec::new();
    v.extend(univariate::cases());
    v.extend(bivariate::cases());
    v.extend(jets::cases());
    v.extend(eta::cases());
    v.extend(relations::cases());
    v.extend(combinatorial::cases());
    v
}

/// Looks up a case by id.
pub fn find<'a>(cases: &'a [IdentityCase], id: &str) -> Option<&'a IdentityCase> {
    cases.iter().find(|c| c.id == id)
}
