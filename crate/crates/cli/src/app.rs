//! Argument parsing and dispatch. Precedence for every setting: command-line
//! flag, then the `--config` file, then the built-in default.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use loglambert_core::report::IdentityId;
use loglambert_core::Tolerance;

use crate::commands::{self, AsymptTarget, MomentPlan, VerifyPlan};
use crate::config::{parse_from_str, ConfigFile};
use crate::error::{CliError, EXIT_FAIL, EXIT_PASS};
use crate::grid::{parse_complex_list, parse_int_list, parse_real_list};
use crate::runner::resolve_threads;
use crate::sink::{Format, Sink};
use crate::tasks::{default_tolerance, resolve_identity, GridSpec, ToleranceOverride};

#[derive(Debug, Parser)]
#[command(name = "loglambert", version, about = "Numerical verification of log-weighted Lambert series identities")]
pub struct Cli {
    /// key = value file supplying defaults for any long flag.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Report destination; standard output when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// json or csv.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Worker threads; falls back to LOGLAMBERT_THREADS, then all cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Fill wall_ms (makes reports run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a special function.
    Eval(EvalArgs),
    /// Check identities over parameter grids.
    Verify(VerifyArgs),
    /// Sweep truncation orders of an asymptotic expansion.
    Asympt(AsymptArgs),
    /// Smoothed zeta moments over a delta grid.
    Moment(MomentArgs),
    /// Summarize a verify report per identity.
    Report(ReportArgs),
}

/// Grid values: `re,im` or a real, `;`-separated or repeated.
#[derive(Debug, Args, Default)]
pub struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub y: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub w: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub z: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Vec<String>,
    /// Truncation orders, e.g. `1..4`.
    #[arg(long = "K", alias = "k", allow_hyphen_values = true)]
    pub k: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Vec<String>,
}

#[derive(Debug, Args, Default)]
pub struct ToleranceArgs {
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub abs_tol: Option<f64>,
    #[arg(long)]
    pub max_terms: Option<usize>,
    #[arg(long)]
    pub max_evals: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub function: Option<String>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub tol: ToleranceArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity name or alias; repeatable.
    #[arg(long)]
    pub identity: Vec<String>,
    #[arg(long)]
    pub all: bool,
    /// Draw this many random points per identity instead of the grid.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub tol: ToleranceArgs,
}

#[derive(Debug, Args)]
pub struct AsymptArgs {
    /// thm1.2 (small-y Lambert expansion) or thm3.1 (large-z psi1 expansion).
    #[arg(long)]
    pub target: Option<String>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub tol: ToleranceArgs,
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    /// Run the second-moment suite first; stop if it fails.
    #[arg(long)]
    pub calibrate: bool,
    /// Add the rotated-series and smooth-remainder columns.
    #[arg(long)]
    pub rotated: bool,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub tol: ToleranceArgs,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// A JSON or CSV report written by `verify`.
    #[arg(long)]
    pub input: PathBuf,
}

/// Settings after merging flags with the config file.
struct Resolved<'a> {
    cfg: &'a ConfigFile,
}

impl Resolved<'_> {
    fn grid(&self, g: &GridArgs) -> Result<GridSpec, CliError> {
        let list = |flag: &Vec<String>, key: &str| self.cfg.or_list(flag.clone(), key);
        Ok(GridSpec {
            y: parse_complex_list(&list(&g.y, "y"))?,
            w: parse_complex_list(&list(&g.w, "w"))?,
            z: parse_complex_list(&list(&g.z, "z"))?,
            a: parse_complex_list(&list(&g.a, "a"))?,
            m: parse_int_list(&list(&g.m, "m"))?,
            alpha: parse_real_list(&list(&g.alpha, "alpha"))?,
            k: parse_int_list(&list(&g.k, "k"))?,
            c: parse_real_list(&list(&g.c, "c"))?,
            delta: parse_real_list(&list(&g.delta, "delta"))?,
        })
    }

    fn tol(&self, t: &ToleranceArgs) -> Result<ToleranceOverride, CliError> {
        Ok(ToleranceOverride {
            abs_tol: self.cfg.or_flag(t.abs_tol, "abs_tol", parse_from_str)?,
            rel_tol: self.cfg.or_flag(t.rel_tol, "rel_tol", parse_from_str)?,
            max_terms: self.cfg.or_flag(t.max_terms, "max_terms", parse_from_str)?,
            max_evals: self.cfg.or_flag(t.max_evals, "max_evals", parse_from_str)?,
        })
    }

    fn string(&self, flag: &Option<String>, key: &str) -> Option<String> {
        flag.clone().or_else(|| self.cfg.get(key).map(str::to_string))
    }
}

fn positive_orders(k: &[i64]) -> Result<Vec<usize>, CliError> {
    k.iter()
        .map(|&x| {
            usize::try_from(x)
                .ok()
                .filter(|&u| u > 0)
                .ok_or_else(|| CliError::usage(format!("K = {x} must be positive")))
        })
        .collect()
}

/// Runs one invocation; returns the process exit status. Reports go to
/// `--output` or `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { crate::error::EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<bool, CliError> {
    let cfg = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let r = Resolved { cfg: &cfg };
    let default_format = if matches!(cli.command, Command::Asympt(_)) { Format::Csv } else { Format::Json };
    let format = r.string(&cli.format, "format").map(|f| Format::parse(&f)).transpose()?.unwrap_or(default_format);
    let timing = cfg.or_switch(cli.timing, "timing")?;
    let threads = resolve_threads(cfg.or_flag(cli.threads, "threads", parse_from_str)?)?;

    // everything that can be a usage error is settled before the output opens
    enum Job {
        Eval(String, Vec<loglambert_core::ComplexValue>, Tolerance),
        Verify(Box<VerifyPlan>, usize),
        Asympt(AsymptTarget, Vec<loglambert_core::ComplexValue>, Vec<usize>, usize),
        Moment(MomentPlan),
        Report(PathBuf),
    }
    let job = match &cli.command {
        Command::Eval(a) => {
            let function = r.string(&a.function, "function").ok_or_else(|| CliError::usage("eval needs --function"))?;
            commands::check_function(&function)?;
            let grid = r.grid(&a.grid)?;
            let tol = r.tol(&a.tol)?.apply(Tolerance::relative(1e-14))?;
            Job::Eval(function, grid.z, tol)
        }
        Command::Verify(a) => {
            let selectors = cfg.or_list(a.identity.clone(), "identity");
            let all = cfg.or_switch(a.all, "all")?;
            let mut identities = Vec::new();
            if all {
                identities.extend(IdentityId::ALL);
            }
            for list in &selectors {
                for s in list.split([';', ' ']).filter(|s| !s.is_empty()) {
                    let id = resolve_identity(s)?;
                    if !identities.contains(&id) {
                        identities.push(id);
                    }
                }
            }
            let random = cfg.or_flag(a.random, "random", parse_from_str)?;
            let seed = cfg.or_flag(a.seed, "seed", parse_from_str)?.unwrap_or(0);
            let plan = VerifyPlan {
                identities,
                grid: r.grid(&a.grid)?,
                random: random.map(|n| (n, seed)),
                tol: r.tol(&a.tol)?,
            };
            plan.tasks()?;
            Job::Verify(Box::new(plan), threads)
        }
        Command::Asympt(a) => {
            let target = AsymptTarget::parse(
                &r.string(&a.target, "target").ok_or_else(|| CliError::usage("asympt needs --target"))?,
            )?;
            let grid = r.grid(&a.grid)?;
            let given_points =
                !a.grid.y.is_empty() || !a.grid.z.is_empty() || cfg.get("y").is_some() || cfg.get("z").is_some();
            let points = match target {
                AsymptTarget::LambertSmallY => grid.y,
                AsymptTarget::Psi1LargeZ => grid.z,
            };
            let points = if points.is_empty() && !given_points { target.default_points() } else { points };
            let given_orders = !a.grid.k.is_empty() || cfg.get("k").is_some();
            let orders = if given_orders { positive_orders(&grid.k)? } else { target.default_orders() };
            let max_terms = r.tol(&a.tol)?.max_terms.unwrap_or(10_000_000);
            Job::Asympt(target, points, orders, max_terms)
        }
        Command::Moment(a) => {
            let grid = r.grid(&a.grid)?;
            let deltas =
                if a.grid.delta.is_empty() && cfg.get("delta").is_none() { vec![0.4, 0.2, 0.1] } else { grid.delta };
            commands::check_deltas(&deltas)?;
            let plan = MomentPlan {
                deltas,
                calibrate: cfg.or_switch(a.calibrate, "calibrate")?,
                rotated: cfg.or_switch(a.rotated, "rotated")?,
                tol: r.tol(&a.tol)?.apply(default_tolerance(IdentityId::ZetaMoment))?,
            };
            Job::Moment(plan)
        }
        Command::Report(a) => Job::Report(a.input.clone()),
    };

    let out: Box<dyn Write + '_> = match r.string(&cli.output.as_ref().map(|p| p.display().to_string()), "output") {
        Some(path) => Box::new(BufWriter::new(File::create(&path)?)),
        None => Box::new(stdout),
    };
    let mut sink = Sink::new(format, out);
    let ok = match job {
        Job::Eval(f, z, tol) => commands::eval(&f, &z, &tol, &mut sink)?,
        Job::Verify(plan, threads) => commands::verify(&plan, threads, timing, &mut sink)?,
        Job::Asympt(t, p, k, max_terms) => commands::asympt(t, &p, &k, max_terms, &mut sink)?,
        Job::Moment(plan) => {
            let outcome = commands::moment(&plan, &mut sink)?;
            writeln!(stderr, "{}", outcome.summary())?;
            outcome.pass()
        }
        Job::Report(path) => {
            let input =
                File::open(&path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            commands::report(input, &mut sink)?
        }
    };
    sink.finish()?.flush()?;
    Ok(ok)
}
