//! `cdhahn`: CSV/JSON reports for continuous dual Hahn polynomials.
//!
//! Exit status: 0 success, 1 `--check` mismatch or I/O failure, 2 usage
//! error, 3 domain error (pole, overflow, parameters out of range), 4 a
//! series or integral that did not converge.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cdhahn::cdh::CdhParams;

#[derive(Parser, Debug)]
#[command(name = "cdhahn", version, about = "Continuous dual Hahn polynomials and their large-degree limit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// S̃ₙ(y²) at every (n, y) pair.
    Eval(PointArgs),
    /// S̃ₙ(y²) for all degrees 0..=n on a y grid.
    Table(TableArgs),
    /// Amplitude, phase shift and asymptotic value.
    Asym(PointArgs),
    /// Recurrence value against the asymptotic formula along a degree list.
    Converge(ConvergeArgs),
    /// Orthogonality integrals for every pair m <= n from the degree list.
    Ortho(OrthoArgs),
    /// Bound-state energies for negative parameters.
    Spectrum(CommonArgs),
    /// Closed-form generating function against its degree-200 partial sum.
    #[command(name = "genfun-check")]
    GenfunCheck(GenfunArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: f64,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, conflicts_with = "check")]
    out: Option<PathBuf>,
    /// Recompute the report and compare it with this CSV file.
    #[arg(long)]
    check: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PointArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Degree or ascending comma list.
    #[arg(long)]
    n: Grid<u64>,
    /// y or ascending comma list.
    #[arg(long, allow_hyphen_values = true)]
    y: Grid<f64>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Highest degree.
    #[arg(long)]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    y: Grid<f64>,
}

#[derive(Args, Debug)]
struct ConvergeArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long)]
    n: Grid<u64>,
    #[arg(long, allow_hyphen_values = true)]
    y: f64,
}

#[derive(Args, Debug)]
struct OrthoArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long)]
    n: Grid<u64>,
    /// Quadrature tolerance.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args, Debug)]
struct GenfunArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, allow_hyphen_values = true)]
    y: Grid<f64>,
    /// Points in (0, 1).
    #[arg(long, default_value = "0.1,0.3,0.5")]
    t: Grid<f64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Csv,
    Json,
}

/// Non-empty, strictly ascending comma-separated list.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
struct Grid<T>(Vec<T>);

impl<T> FromStr for Grid<T>
where
    T: FromStr + PartialOrd,
    T::Err: std::fmt::Display,
{
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let values = s
            .split(',')
            .map(|part| part.trim().parse::<T>().map_err(|e| format!("`{}`: {e}", part.trim())))
            .collect::<Result<Vec<T>, _>>()?;
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err("list must be strictly ascending".into());
        }
        Ok(Grid(values))
    }
}

/// Echo of the invocation, written into JSON reports.
#[derive(Serialize, Debug)]
struct RunConfig {
    command: &'static str,
    mu: f64,
    a: f64,
    b: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    y: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tol: Option<f64>,
}

enum Failure {
    Usage(String),
    Library(cdhahn::Error),
    Io(String),
    Mismatch(usize),
}

impl From<cdhahn::Error> for Failure {
    fn from(e: cdhahn::Error) -> Self {
        Failure::Library(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            match e {
                cdhahn::Error::NoConvergence { .. } => ExitCode::from(4),
                _ => ExitCode::from(3),
            }
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(count)) => {
            eprintln!("check failed: {count} difference(s)");
            ExitCode::from(1)
        }
    }
}

fn params(common: &CommonArgs, strict: bool) -> Result<CdhParams, Failure> {
    let made = if strict {
        CdhParams::new(common.mu, common.a, common.b)
    } else {
        CdhParams::relaxed(common.mu, common.a, common.b)
    };
    Ok(made?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let (common, config, report) = match &cli.command {
        Command::Eval(args) | Command::Asym(args) => {
            let asym = matches!(cli.command, Command::Asym(_));
            let p = params(&args.common, false)?;
            let report = if asym {
                commands::asym(&p, &args.n.0, &args.y.0)?
            } else {
                commands::eval(&p, &args.n.0, &args.y.0)?
            };
            let config = RunConfig {
                command: if asym { "asym" } else { "eval" },
                n: Some(args.n.0.clone()),
                y: Some(args.y.0.clone()),
                ..RunConfig::base(&args.common)
            };
            (&args.common, config, report)
        }
        Command::Table(args) => {
            let p = params(&args.common, false)?;
            let config = RunConfig {
                command: "table",
                n: Some(vec![args.n]),
                y: Some(args.y.0.clone()),
                ..RunConfig::base(&args.common)
            };
            (&args.common, config, commands::table(&p, args.n, &args.y.0)?)
        }
        Command::Converge(args) => {
            let p = params(&args.common, false)?;
            let config = RunConfig {
                command: "converge",
                n: Some(args.n.0.clone()),
                y: Some(vec![args.y]),
                ..RunConfig::base(&args.common)
            };
            (&args.common, config, commands::converge(&p, args.y, &args.n.0)?)
        }
        Command::Ortho(args) => {
            let p = params(&args.common, true)?;
            let config = RunConfig {
                command: "ortho",
                n: Some(args.n.0.clone()),
                tol: Some(args.tol),
                ..RunConfig::base(&args.common)
            };
            (&args.common, config, commands::ortho(&p, &args.n.0, args.tol)?)
        }
        Command::Spectrum(common) => {
            let p = params(common, false)?;
            let config = RunConfig {
                command: "spectrum",
                ..RunConfig::base(common)
            };
            (common, config, commands::spectrum(&p))
        }
        Command::GenfunCheck(args) => {
            if let Some(t) = args.t.0.iter().find(|t| !(**t > 0.0 && **t < 1.0)) {
                return Err(Failure::Usage(format!("--t must lie in (0, 1), got {t}")));
            }
            let p = params(&args.common, false)?;
            let config = RunConfig {
                command: "genfun-check",
                y: Some(args.y.0.clone()),
                t: Some(args.t.0.clone()),
                ..RunConfig::base(&args.common)
            };
            (&args.common, config, commands::genfun_check(&p, &args.y.0, &args.t.0)?)
        }
    };
    emit(common, &config, &report)
}

impl RunConfig {
    fn base(common: &CommonArgs) -> Self {
        Self {
            command: "",
            mu: common.mu,
            a: common.a,
            b: common.b,
            n: None,
            y: None,
            t: None,
            tol: None,
        }
    }
}

fn emit(common: &CommonArgs, config: &RunConfig, report: &report::Report) -> Result<(), Failure> {
    if let Some(path) = &common.check {
        if common.format != Format::Csv {
            return Err(Failure::Usage("--check reads CSV; drop --format json".into()));
        }
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        let diffs = report
            .diff_csv(&text)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        for d in &diffs {
            eprintln!("{d}");
        }
        if !diffs.is_empty() {
            return Err(Failure::Mismatch(diffs.len()));
        }
        println!("check ok: {} rows, 0 differences", report.rows.len());
        return Ok(());
    }
    let text = match common.format {
        Format::Csv => report.to_csv().map_err(|e| Failure::Io(e.to_string()))?,
        Format::Json => report.to_json(config).map_err(|e| Failure::Io(e.to_string()))?,
    };
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}
