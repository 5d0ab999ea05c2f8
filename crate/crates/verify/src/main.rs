use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hurwitz_verify::config::Config;
use hurwitz_verify::core::class_numbers::{hurwitz, hurwitz12};
use hurwitz_verify::core::combinatorics::{count_p, count_q, list_p, list_q};
use hurwitz_verify::family::{build, FAMILY_HELP};
use hurwitz_verify::oeis::{self, Sequence};
use hurwitz_verify::report::{render, Format};
use hurwitz_verify::runner::{exit_code, run, select, RunOptions};
use hurwitz_verify::{registry, Result};

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Exact q-series identities for Hurwitz class numbers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check registered identities.
    Verify {
        /// Case ids to run; all cases when omitted.
        #[arg(long = "id")]
        ids: Vec<String>,
        /// Truncation order for every selected case.
        #[arg(long)]
        order: Option<i64>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// `key = value` file with `default_order` and `jobs`; flags win.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Print ids, modes and orders without running anything.
        #[arg(long)]
        list: bool,
    },
    /// Print the Hurwitz class number H(N).
    Hurwitz { n: u64 },
    /// Print the coefficients of a named series.
    Series {
        #[arg(long, help = FAMILY_HELP)]
        family: String,
        #[arg(long, default_value_t = 20)]
        order: i64,
    },
    /// Count (or list) P(n) compositions or Q(n) partitions.
    Partitions {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        list: bool,
    },
    /// Compare an enumerator with a local OEIS b-file.
    Oeis {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long, default_value_t = 200)]
        max: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    P,
    Q,
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().cmd) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Verify { ids, order, jobs, format, config, list } => {
            let cfg = config.as_deref().map(Config::load).transpose()?.unwrap_or_default();
            let cases = registry();
            let selected = select(&cases, &ids)?;
            if list {
                if format == Format::Json {
                    let rows: Vec<_> = selected
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "id": c.id,
                                "group": c.group,
                                "mode": c.mode.to_string(),
                                "default_order": c.default_order,
                                "allow_fail": c.allow_fail,
                                "formula": c.formula,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&rows).expect("catalogue serializes"));
                } else {
                    for c in &selected {
                        let flag = if c.allow_fail { "  allow_fail" } else { "" };
                        println!("{:<40} {:<16} {:>4}{flag}", c.id, c.mode.to_string(), c.default_order);
                    }
                }
                return Ok(0);
            }
            let opts = RunOptions { order: order.or(cfg.default_order), jobs: jobs.or(cfg.jobs).unwrap_or(1) };
            let reports = run(&selected, opts);
            print!("{}", render(&reports, format));
            Ok(exit_code(&reports))
        }
        Cmd::Hurwitz { n } => {
            println!("H({n}) = {}  (12H = {})", hurwitz(n), hurwitz12(n));
            Ok(0)
        }
        Cmd::Series { family, order } => {
            let s = build(&family, order)?;
            for (e, c) in s.terms() {
                println!("{e} {c}");
            }
            println!("# through q^{}", s.order());
            Ok(0)
        }
        Cmd::Partitions { kind, n, list } => {
            match (kind, list) {
                (Kind::P, false) => println!("{}", count_p(n)?),
                (Kind::Q, false) => println!("{}", count_q(n)?),
                (Kind::P, true) => list_p(n)?.iter().for_each(|c| println!("{c}")),
                (Kind::Q, true) => list_q(n)?.iter().for_each(|c| println!("{c}")),
            }
            Ok(0)
        }
        Cmd::Oeis { seq, bfile, max, format } => {
            let seq: Sequence = seq.parse()?;
            let report = oeis::compare(seq, &oeis::read_bfile(&bfile)?, max)?;
            print!("{}", render(std::slice::from_ref(&report), format));
            Ok(exit_code(std::slice::from_ref(&report)))
        }
    }
}
