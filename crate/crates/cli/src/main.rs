mod report;
mod suites;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::Report;

const N_MAX: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "qsphere", version, about = "Exact verification suites for bundles on the quantum 4-sphere")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest n for the n-indexed suites.
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,
    /// Sample values of q in (0, 1), as decimals or fractions.
    #[arg(long, global = true, value_delimiter = ',', default_value = "1/2")]
    q: Vec<String>,
    /// Truncation level K of the numeric representation.
    #[arg(long, global = true, default_value_t = 30)]
    trunc: usize,
    /// Longest overlap word inspected by the confluence check.
    #[arg(long = "degree-bound", global = true, default_value_t = 4)]
    degree_bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed of the randomized property checks.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Normal forms, relations and local confluence.
    VerifyAlgebra,
    /// Invariants of the corepresentation matrices.
    VerifyHopf,
    /// Isometries, covariance, orthogonality and the tensor decomposition.
    VerifyBundles,
    /// Exact Chern characters.
    Chern,
    /// Relations in the K-ring.
    KRelations,
    /// The classical even spheres.
    Classical,
    /// Truncated floating-point cross-check.
    Numcheck,
    /// Every suite.
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Serialize)]
pub struct RunConfig {
    subcommand: Command,
    pub n: usize,
    pub q: Vec<f64>,
    pub trunc: usize,
    pub degree_bound: usize,
    format: Format,
    out: Option<PathBuf>,
    pub seed: u64,
}

fn parse_q(s: &str) -> Result<f64, String> {
    let v = match s.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| format!("invalid q sample {s:?}"))?;
            let b: i64 = b.trim().parse().map_err(|_| format!("invalid q sample {s:?}"))?;
            if b == 0 {
                return Err(format!("invalid q sample {s:?}"));
            }
            a as f64 / b as f64
        }
        None => s.trim().parse().map_err(|_| format!("invalid q sample {s:?}"))?,
    };
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err(format!("q sample {s} is not strictly inside (0, 1)"))
    }
}

fn config(cli: Cli) -> Result<RunConfig, String> {
    if cli.n > N_MAX {
        return Err(format!("--n {} exceeds the limit {N_MAX}", cli.n));
    }
    if cli.trunc == 0 {
        return Err("--trunc must be positive".into());
    }
    let q = cli.q.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>, _>>()?;
    if q.is_empty() {
        return Err("at least one q sample is required".into());
    }
    Ok(RunConfig {
        subcommand: cli.command,
        n: cli.n,
        q,
        trunc: cli.trunc,
        degree_bound: cli.degree_bound,
        format: cli.format,
        out: cli.out,
        seed: cli.seed,
    })
}

fn run(cfg: RunConfig) -> Report<RunConfig> {
    use Command::*;
    let mut checks = Vec::new();
    let mut convergence = Vec::new();
    let wanted = |c: Command| cfg.subcommand == c || cfg.subcommand == All;
    if wanted(VerifyAlgebra) {
        checks.extend(suites::algebra(&cfg));
    }
    if wanted(VerifyHopf) {
        checks.extend(suites::hopf(&cfg));
    }
    if wanted(VerifyBundles) {
        checks.extend(suites::bundles(&cfg));
    }
    if wanted(Chern) {
        checks.extend(suites::chern(&cfg));
    }
    if wanted(KRelations) {
        checks.extend(suites::k_relations(&cfg));
    }
    if wanted(Classical) {
        checks.extend(suites::classical(&cfg));
    }
    if wanted(Numcheck) {
        let (c, table) = suites::numeric(&cfg);
        checks.extend(c);
        convergence = table;
    }
    Report { version: env!("CARGO_PKG_VERSION").to_string(), config: cfg, checks, convergence }
}

fn emit(report: &Report<RunConfig>) -> io::Result<()> {
    let sink: Box<dyn Write> = match &report.config.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    match report.config.format {
        Format::Json => report.write_json(sink),
        Format::Csv => report.write_csv(sink).map_err(io::Error::other),
        Format::Text => report.write_text(sink),
    }
}

fn main() -> ExitCode {
    let cfg = match config(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = run(cfg);
    if let Err(e) = emit(&report) {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
