use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use np_spectrum::figures;
use np_spectrum::sweep::{self, MethodChoice, SweepGrid};
use np_spectrum::verify::{self, Suite, VerificationReport};
use np_spectrum::Dimension;

/// Neumann-Poincaré eigenvalues for Helmholtz on the unit ball and disk.
#[derive(Parser)]
#[command(name = "npspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single eigenvalue.
    Eig(EigArgs),
    /// Evaluate an (n, k) grid and write CSV.
    Sweep(SweepArgs),
    /// Write the figure data files fig1.csv .. fig5.csv.
    Figures(FiguresArgs),
    /// Run invariant suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Common {
    /// 2 (disk) or 3 (ball).
    #[arg(long, default_value_t = 3, value_parser = parse_dim)]
    dim: u8,
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// a, b, c, leading, auto or oracle.
    #[arg(long, default_value = "auto", value_parser = parse_method)]
    method: MethodChoice,
}

#[derive(Args)]
struct EigArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: f64,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// Single order; shorthand for a one-element --n-list.
    #[arg(long, conflicts_with = "n_list")]
    n: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    n_list: Option<Vec<u32>>,
    #[arg(long, default_value_t = 0.0)]
    k_min: f64,
    #[arg(long, default_value_t = 20.0)]
    k_max: f64,
    #[arg(long, default_value_t = 401)]
    k_steps: usize,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FiguresArgs {
    /// Figure number 1-5; all five when omitted.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    which: Option<u8>,
    /// Output directory.
    #[arg(long, default_value = "figures")]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: SuiteArg,
    /// Tolerance applied to every check of the selected suites.
    #[arg(long, value_parser = parse_tol)]
    tol: Option<f64>,
    /// Print the reports as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON reports to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy)]
enum SuiteArg {
    All,
    One(Suite),
}

fn parse_dim(s: &str) -> Result<u8, String> {
    match s {
        "2" => Ok(2),
        "3" => Ok(3),
        _ => Err(format!("expected 2 or 3, got '{s}'")),
    }
}

fn parse_method(s: &str) -> Result<MethodChoice, String> {
    s.parse().map_err(|e: np_spectrum::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<SuiteArg, String> {
    if s == "all" {
        return Ok(SuiteArg::All);
    }
    s.parse()
        .map(SuiteArg::One)
        .map_err(|e: np_spectrum::Error| e.to_string())
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
        _ => Err(format!("expected a finite tolerance >= 0, got '{s}'")),
    }
}

fn dimension(dim: u8) -> Dimension {
    Dimension::from_int(dim).expect("validated by the argument parser")
}

fn cmd_eig(args: &EigArgs) -> anyhow::Result<()> {
    let c = &args.common;
    let rec = sweep::evaluate(dimension(c.dim), args.n, args.k, c.radius, c.method)?;
    println!(
        "dim={} n={} k={} radius={} method={} re={:.14e} im={:.14e} abs={:.14e}",
        rec.dimension,
        rec.n,
        rec.k,
        rec.radius,
        rec.method,
        rec.value.re,
        rec.value.im,
        rec.value.norm()
    );
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> anyhow::Result<()> {
    let n_list = match (&args.n_list, args.n) {
        (Some(list), _) => list.clone(),
        (None, Some(n)) => vec![n],
        (None, None) => bail!("one of --n or --n-list is required"),
    };
    let grid = SweepGrid {
        dimension: dimension(args.common.dim),
        n_list,
        k_min: args.k_min,
        k_max: args.k_max,
        k_steps: args.k_steps,
        method: args.common.method,
        radius: args.common.radius,
    };
    match &args.out {
        Some(path) => {
            let rows = sweep::sweep_to_file(&grid, path)?;
            eprintln!("wrote {rows} rows to {}", path.display());
        }
        None => {
            let records = sweep::evaluate_grid(&grid)?;
            sweep::write_csv(&records, io::stdout().lock())?;
        }
    }
    Ok(())
}

fn cmd_figures(args: &FiguresArgs) -> anyhow::Result<()> {
    let paths = match args.which {
        Some(w) => vec![figures::write_figure(w, &args.out)?],
        None => figures::write_all(&args.out)?,
    };
    for p in paths {
        println!("{}", p.display());
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<bool> {
    let reports: Vec<VerificationReport> = match args.suite {
        SuiteArg::All => verify::run_all(args.tol)?,
        SuiteArg::One(s) => verify::run_suite(s, args.tol)?,
    };
    let passed = reports.iter().all(|r| r.passed);
    let json = serde_json::to_string_pretty(&reports)?;
    let mut stdout = io::stdout().lock();
    if args.json {
        writeln!(stdout, "{json}")?;
    } else {
        for r in &reports {
            writeln!(stdout, "{r}")?;
        }
        let failed = reports.iter().filter(|r| !r.passed).count();
        writeln!(
            stdout,
            "{}: {} checks, {} failed",
            if passed { "PASS" } else { "FAIL" },
            reports.len(),
            failed
        )?;
    }
    if let Some(path) = &args.out {
        fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Eig(a) => cmd_eig(a).map(|_| true),
        Command::Sweep(a) => cmd_sweep(a).map(|_| true),
        Command::Figures(a) => cmd_figures(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
