//! Command-line driver: dimension formulas and seeded verification suites,
//! all reported as JSON.

pub mod dims;
pub mod report;
pub mod runner;
pub mod suites;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use skein_core::quantum_torus::Triangulation;

use crate::report::Report;
use crate::suites::{Params, Suite};

#[derive(Debug, Parser)]
#[command(name = "skein", version, about = "Exact checks for skein algebras at odd roots of unity")]
pub struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension formulas for surfaces and marked 3-manifolds.
    #[command(subcommand)]
    Dims(DimsCommand),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum DimsCommand {
    Surface {
        #[arg(long, default_value_t = 0)]
        genus: u32,
        #[arg(long, default_value_t = 0)]
        punctures: u32,
        /// Number of boundary edges.
        #[arg(long, default_value_t = 0)]
        boundary: u32,
        /// Number of boundary circles carrying those edges; defaults to 1 when there are any.
        #[arg(long)]
        boundary_circles: Option<u32>,
        #[arg(long = "N")]
        n: u32,
    },
    Manifold {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 0)]
        markings: u32,
        #[arg(long = "N")]
        n: u32,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long = "N", default_value_t = 3)]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Largest exponent in exhaustive and sampled monomials; defaults to 2N.
    #[arg(long)]
    pub max_exp: Option<u32>,
    /// Triangulation JSON; defaults to the built-in fixtures.
    #[arg(long)]
    pub triangulation: Option<PathBuf>,
    #[arg(long, default_value_t = 6)]
    pub kmax: usize,
}

/// What the binary prints and how it exits.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn usage(msg: impl Into<String>) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {}", msg.into()),
            code: 2,
        }
    }
}

fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    text.expect("report types serialize")
}

pub fn run(cli: Cli) -> Output {
    match cli.command {
        Command::Dims(cmd) => match dims::run(&cmd) {
            Ok(value) => Output {
                stdout: to_json(&value, cli.pretty),
                stderr: String::new(),
                code: 0,
            },
            Err(e) => Output::usage(e.to_string()),
        },
        Command::Verify(args) => match verify(&args) {
            Ok(report) => Output {
                stdout: to_json(&report, cli.pretty),
                stderr: String::new(),
                code: if report.all_passed() { 0 } else { 1 },
            },
            Err(msg) => Output::usage(msg),
        },
    }
}

fn load_triangulations(path: &Option<PathBuf>) -> Result<Vec<(String, Triangulation)>, String> {
    let Some(path) = path else {
        return Ok(vec![
            ("once-punctured-torus".into(), Triangulation::once_punctured_torus()),
            ("four-punctured-sphere".into(), Triangulation::four_punctured_sphere()),
        ]);
    };
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let t = Triangulation::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "input".into());
    Ok(vec![(name, t)])
}

pub fn verify(args: &VerifyArgs) -> Result<Report, String> {
    let n = args.n;
    if n == 0 || n.is_multiple_of(2) {
        return Err(format!("N must be a positive odd integer, got {n}"));
    }
    if args.suite == Suite::TorusSkein && (n < 3 || args.kmax == 0) {
        return Err("torus-skein needs N >= 3 and kmax >= 1".into());
    }
    let max_exp = args.max_exp.unwrap_or(2 * n);
    let triangulations = if args.suite == Suite::Qtorus {
        load_triangulations(&args.triangulation)?
    } else {
        Vec::new()
    };
    let params = Params {
        n,
        trials: args.trials,
        max_exp,
        kmax: args.kmax,
        triangulations,
    };
    let checks = args.suite.checks(&params);
    let results = runner::run_checks(args.seed, &checks);
    let mut recorded = BTreeMap::new();
    match args.suite {
        Suite::Bigon => {
            recorded.insert("trials".to_string(), args.trials as u64);
            recorded.insert("max_exp".to_string(), max_exp as u64);
        }
        Suite::Qtorus | Suite::Chebyshev => {
            recorded.insert("trials".to_string(), args.trials as u64);
        }
        Suite::TorusSkein => {
            recorded.insert("kmax".to_string(), args.kmax as u64);
        }
        Suite::Counts => {}
    }
    Ok(Report::new(args.suite.name(), args.seed, n, recorded, results))
}
