//! `minw`: level classification, catalog listing, verification suites,
//! collapse chains and the `sl(2|n)` free-field check.
//!
//! Exit status: 0 when everything requested passed, 1 on a verification
//! failure, 2 on a usage or input error.

mod goldens;
mod output;
mod suites;

use clap::{ArgAction, Parser, Subcommand};
use minw_core::exactmath::parse_q;
use minw_core::levels::{classify, collapse_chain, LevelClassification};
use minw_core::realize::RealizeError;
use minw_core::rootcat::{catalog, AlgebraId};
use output::{ChainView, Format};
use rayon::prelude::*;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use suites::{Suite, SuiteConfig};

#[derive(Debug, Parser)]
#[command(
    name = "minw",
    version,
    about = "Collapsing and conformal levels of minimal W-algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for sampled Jacobi checks.
    #[arg(long, default_value_t = 7, global = true)]
    seed: u64,
    /// Rewrite the golden files of the suite instead of comparing against them.
    #[arg(long, global = true)]
    regenerate_goldens: bool,
    /// Directory holding the golden files.
    #[arg(long, global = true, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/goldens"))]
    goldens: PathBuf,
    /// Progress on stderr; repeat for more.
    #[arg(short, long, action = ArgAction::Count, global = true)]
    verbose: u8,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classification record for each algebra, e.g. `sl(4)`, `osp(5|2)`, `D(2,1;3/2)`, `F(4):sl2`.
    Classify {
        #[arg(required = true)]
        algebras: Vec<String>,
    },
    /// Classification records for every catalog entry.
    Catalog,
    /// Run a verification suite.
    Verify {
        /// One of: pk, invariants, bracket-reduction, trivial-levels,
        /// conformal-levels, level-equation, structure, realize-<n>.
        suite: String,
    },
    /// Follow the collapse of `W_k(g)` through its affine factors.
    Chain {
        algebra: String,
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
    /// Free-field realization check for `W_k(sl(2|n))`, `k = (n−1)/2`.
    Realize { n: usize },
}

/// Why a run did not succeed.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 1,
        }
    }
}

fn parse_algebra(s: &str) -> Result<AlgebraId, Failure> {
    AlgebraId::parse_valid(s).map_err(|e| Failure::Usage(e.to_string()))
}

fn classify_all(ids: &[AlgebraId]) -> Result<Vec<LevelClassification>, Failure> {
    ids.par_iter()
        .map(|id| classify(id).map_err(|e| Failure::Usage(e.to_string())))
        .collect()
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                Err(Failure::Usage(format!("cannot write output: {e}")))
            }
            _ => Ok(()),
        },
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Classify { algebras } => {
            let ids = algebras
                .iter()
                .map(|s| parse_algebra(s))
                .collect::<Result<Vec<_>, _>>()?;
            let lcs = classify_all(&ids)?;
            emit(cli, &output::classifications(cli.format, &lcs))
        }
        Command::Catalog => {
            let lcs = classify_all(&catalog())?;
            emit(cli, &output::classifications(cli.format, &lcs))
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(Failure::Usage)?;
            let cfg = SuiteConfig {
                seed: cli.seed,
                goldens: cli.goldens.clone(),
                regenerate: cli.regenerate_goldens,
                verbose: cli.verbose,
            };
            let report = suites::run(&suite, &cfg).map_err(Failure::Usage)?;
            emit(cli, &output::suite(cli.format, &report))?;
            if report.failed > 0 {
                return Err(Failure::Verification(format!(
                    "{}: {} of {} cases failed",
                    report.suite,
                    report.failed,
                    report.cases.len()
                )));
            }
            Ok(())
        }
        Command::Chain { algebra, k } => {
            let id = parse_algebra(algebra)?;
            let k = parse_q(k).map_err(|e| Failure::Usage(e.to_string()))?;
            let chain = collapse_chain(&id, &k).map_err(|e| Failure::Usage(e.to_string()))?;
            emit(
                cli,
                &output::chain(cli.format, &ChainView::new(&id, &k, &chain)),
            )
        }
        Command::Realize { n } => {
            let reports = suites::realize_reports(*n).map_err(|e| match e {
                RealizeError::UnsupportedN { .. } => Failure::Usage(e.to_string()),
                e => Failure::Verification(e.to_string()),
            })?;
            emit(cli, &output::realize(cli.format, &reports))?;
            if let Some(bad) = reports.iter().find(|r| !r.all_hold()) {
                return Err(Failure::Verification(format!(
                    "{} (n = {n}) has failing identities",
                    bad.title
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Verification(m) => eprintln!("FAIL: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
