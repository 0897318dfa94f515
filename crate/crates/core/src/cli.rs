//! `fast` command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::load_scenario;
use crate::error::{Error, Result};
use crate::fidelity::{fit_curve_with, read_samples, CurveDocument, FitOptions, ScalingFactor};
use crate::harness::{
    compare, export_results, run_fast, sweep, ExportFormat, Method, ScenarioResult, SweepAxis,
};
use crate::solver::SolverConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser, PartialEq)]
#[command(
    name = "fast",
    version,
    about = "Pick model width, CPU frequencies and transmit power for minimum energy"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, PartialEq)]
pub enum Command {
    /// Fit a fidelity curve to `pi,fidelity` samples.
    Fit(FitArgs),
    /// Solve one scenario and print the optimal strategy.
    Solve(SolveArgs),
    /// Sweep one scenario parameter over a list of values.
    Sweep(SweepArgs),
    /// Compare the adaptive method against the baselines at fixed fidelity targets.
    Compare(CompareArgs),
}

#[derive(Debug, Args, PartialEq)]
pub struct FitArgs {
    #[arg(long)]
    pub samples: PathBuf,
    #[arg(long, default_value_t = 0.25)]
    pub pi_min: f64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = FitOptions::default().rms_ceiling)]
    pub rms_ceiling: f64,
}

#[derive(Debug, Args, PartialEq, Clone, Copy)]
pub struct SolverArgs {
    /// Bisection tolerance.
    #[arg(long, default_value_t = SolverConfig::default().tol)]
    pub tol: f64,
    #[arg(long, default_value_t = SolverConfig::default().max_iters)]
    pub max_iters: usize,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            tol: self.tol,
            max_iters: self.max_iters,
            ..SolverConfig::default()
        }
    }
}

#[derive(Debug, Args, PartialEq)]
pub struct OutputArgs {
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// `csv` or `json`.
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    pub format: ExportFormat,
}

#[derive(Debug, Args, PartialEq)]
pub struct SolveArgs {
    #[arg(long)]
    pub scenario: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args, PartialEq)]
pub struct SweepArgs {
    #[arg(long)]
    pub scenario: PathBuf,
    /// distance, eps_scale, t_max or phi_min.
    #[arg(long, value_parser = parse_axis)]
    pub axis: SweepAxis,
    #[arg(long, value_delimiter = ',', required = true)]
    pub values: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "fast,prune,quant", value_parser = parse_method)]
    pub methods: Vec<Method>,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args, PartialEq)]
pub struct CompareArgs {
    #[arg(long)]
    pub scenario: PathBuf,
    /// Fidelity targets, one prune/quant/adaptive row group each.
    #[arg(long, value_delimiter = ',', default_value = "0.80,0.85")]
    pub targets: Vec<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
}

fn parse_format(s: &str) -> std::result::Result<ExportFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_axis(s: &str) -> std::result::Result<SweepAxis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

pub fn parse_args<I, T>(argv: I) -> std::result::Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(argv).map(|cli| cli.command)
}

/// Install the stderr logger; `FAST_LOG` is `quiet`, `info` or `debug`.
pub fn init_logging() {
    let level = match std::env::var("FAST_LOG").as_deref() {
        Ok("quiet") => log::LevelFilter::Off,
        Ok("info") => log::LevelFilter::Info,
        Ok("debug") => log::LevelFilter::Debug,
        _ => log::LevelFilter::Warn,
    };
    let _ = env_logger::Builder::new()
        .filter_level(level)
        .target(env_logger::Target::Stderr)
        .try_init();
}

/// Run a command and map the outcome to a process exit code.
pub fn dispatch(cmd: Command) -> i32 {
    match run(cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn table_exit(table: &[ScenarioResult]) -> i32 {
    if table.iter().any(|r| r.status.is_feasible()) {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    }
}

fn write_table(table: &[ScenarioResult], out: &OutputArgs) -> Result<()> {
    if let Some(path) = &out.out {
        export_results(table, path, out.format)?;
        log::info!("wrote {} rows to {}", table.len(), path.display());
    }
    Ok(())
}

pub fn run(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Fit(args) => {
            let pi_min = ScalingFactor::new(args.pi_min)?;
            let samples = read_samples(&args.samples)?;
            let opts = FitOptions {
                rms_ceiling: args.rms_ceiling,
                ..FitOptions::default()
            };
            let fit = fit_curve_with(&samples, pi_min, &opts)?;
            let doc = CurveDocument::from_fit(&fit);
            fs::write(&args.out, doc.to_toml()).map_err(|e| Error::io(&args.out, e))?;
            println!(
                "kappa = ({:.6}, {:.6}, {:.6}, {:.6}), rms = {:.3e}",
                doc.kappa1, doc.kappa2, doc.kappa3, doc.kappa4, doc.fit_rms
            );
            Ok(EXIT_OK)
        }
        Command::Solve(args) => {
            let cfg = args.solver.config();
            cfg.validate()?;
            let scenario = load_scenario(&args.scenario)?;
            let result = run_fast(&scenario, &cfg)?;
            print!("{}", summary(&result, scenario.constraints.t_max));
            write_table(std::slice::from_ref(&result), &args.output)?;
            Ok(table_exit(std::slice::from_ref(&result)))
        }
        Command::Sweep(args) => {
            let cfg = args.solver.config();
            cfg.validate()?;
            let scenario = load_scenario(&args.scenario)?;
            let table = sweep(&scenario, args.axis, &args.values, &args.methods, &cfg);
            if args.output.out.is_none() {
                print!("{}", crate::harness::render(&table, args.output.format)?);
            }
            write_table(&table, &args.output)?;
            Ok(table_exit(&table))
        }
        Command::Compare(args) => {
            let cfg = args.solver.config();
            cfg.validate()?;
            let scenario = load_scenario(&args.scenario)?;
            let table = compare(&scenario, &args.targets, &cfg)?;
            if args.output.out.is_none() {
                print!("{}", crate::harness::render(&table, args.output.format)?);
            }
            write_table(&table, &args.output)?;
            Ok(table_exit(&table))
        }
    }
}

/// Human-readable strategy and cost summary.
pub fn summary(r: &ScenarioResult, t_max: f64) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "method      {}", r.method);
    let _ = writeln!(out, "status      {}", r.status.label());
    if let Some(s) = &r.strategy {
        let _ = writeln!(
            out,
            "pi          {:.4}{}",
            s.pi.get(),
            if r.pi_clamped {
                " (clamped to pi_min)"
            } else {
                ""
            }
        );
        let _ = writeln!(out, "f_e         {:.4e} Hz", s.f_e);
        let _ = writeln!(out, "f_d         {:.4e} Hz", s.f_d);
        let _ = writeln!(out, "P           {:.4e} W", s.power);
    }
    if let Some(sol) = &r.solve {
        let _ = writeln!(
            out,
            "split       alpha {:.6}  beta {:.6}  gamma {:.6}",
            sol.split.alpha, sol.split.beta, sol.split.gamma
        );
        let _ = writeln!(
            out,
            "lambda*     {:.6e} ({} outer / {} inner iterations)",
            sol.lambda_star, sol.outer_iters, sol.total_inner_iters
        );
    }
    if let Some(c) = &r.cost {
        let _ = writeln!(
            out,
            "T_cmp/T_com {:.4} s / {:.4} s (budget {t_max} s)",
            c.t_cmp, c.t_com
        );
        let _ = writeln!(out, "E_cmp/E_com {:.4e} J / {:.4e} J", c.e_cmp, c.e_com);
        let _ = writeln!(out, "E_tot       {:.4e} J", c.e_tot);
    }
    if let Some(f) = r.fidelity {
        let _ = writeln!(out, "fidelity    {f:.6}");
    }
    if let Some(bits) = r.data_bits {
        let _ = writeln!(out, "data        {:.0} bits", bits);
    }
    out
}
