//! Identity registry, verification runner and the `hurwitz` command-line tool.

pub mod config;
pub mod error;
pub mod families;
pub mod family;
pub mod oeis;
pub mod outcome;
pub mod registry;
pub mod report;
pub mod runner;

pub use error::{Result, VerifyError};
pub use hurwitz_core as core;
pub use registry::{registry, IdentityCase};
pub use report::{Format, Status, VerificationReport};
pub use runner::{run, select, RunOptions};
