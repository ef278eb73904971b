//! Argument parsing, suite execution and report output for the `qaw` binary.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use qaw_core::verify::{run_suite, Mode, Suite, SuiteReport, VerifyConfig, VerifyError};

/// Exit status when every check passes.
pub const EXIT_PASS: i32 = 0;
/// Exit status when at least one identity fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for malformed flags or an invalid configuration.
pub const EXIT_CONFIG: i32 = 2;

/// Environment variable capping the number of worker threads.
pub const THREADS_VAR: &str = "QAW_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Eval,
}

#[derive(Debug, Parser)]
#[command(
    name = "qaw",
    version,
    about = "Exact verification of the Askey-Wilson relations among intermediate Casimirs of U_q(sl2)",
    after_help = "Spins are given as two_j integers: 1 is spin 1/2, 2 is spin 1, 0 is the trivial module."
)]
struct Args {
    /// Suite to run: structure, rmatrix, theorem, tau, aw3, aw3-symbolic, aw4 or all
    #[arg(long, default_value = "all")]
    suite: String,

    /// Comma-separated two_j values, one per tensor leg
    #[arg(long, value_delimiter = ',', default_value = "1,1,1")]
    spins: Vec<u32>,

    /// exact: rational functions in s; eval: exact rationals at seeded points
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,

    /// Number of sample points in eval mode
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    points: u64,

    /// Seed for the sample points in eval mode
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Also write the report as JSON to this path
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Print parameters, timings and witnesses for every check
    #[arg(long)]
    verbose: bool,

    /// Perturb one E entry in every representation (test fixture)
    #[arg(long, hide = true)]
    negative_control: bool,
}

/// A validated command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub verify: VerifyConfig,
    pub json: Option<PathBuf>,
    pub verbose: bool,
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed flags, or `--help` / `--version`.
    Usage(clap::Error),
    /// Flags parse but describe an invalid run.
    Config(VerifyError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(e) if !e.use_stderr() => EXIT_PASS,
            _ => EXIT_CONFIG,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(e) => write!(f, "{e}"),
            CliError::Config(e) => write!(f, "error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Parses `argv` (including the program name) and validates the suite's
/// arity and the eval parameters without running anything.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(CliError::Usage)?;
    let suite: Suite = args.suite.parse().map_err(CliError::Config)?;
    let mode = match args.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Eval => Mode::Eval { points: args.points as usize, seed: args.seed },
    };
    let verify = VerifyConfig { suite, spins: args.spins, mode, negative_control: args.negative_control };
    verify.validate().map_err(CliError::Config)?;
    Ok(RunConfig { verify, json: args.json, verbose: args.verbose })
}

fn thread_cap() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(format!("{THREADS_VAR} must be a positive integer, got '{v}'")),
        },
    }
}

fn execute(config: &VerifyConfig) -> Result<Result<SuiteReport, VerifyError>, String> {
    match thread_cap()? {
        None => Ok(run_suite(config)),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| e.to_string())?;
            Ok(pool.install(|| run_suite(config)))
        }
    }
}

/// Human-readable report. Verdicts are read from the same `SuiteReport`
/// that is serialized to JSON.
pub fn render_text(report: &SuiteReport, verbose: bool) -> String {
    let mut s = String::new();
    let c = &report.config;
    s.push_str(&format!("suite {} spins {:?} mode {}", report.suite, c.spins, c.mode));
    if c.mode == "eval" {
        s.push_str(&format!(" points {} seed {}", c.points, c.seed));
    }
    if c.negative_control {
        s.push_str(" negative-control");
    }
    s.push('\n');
    for check in &report.checks {
        s.push_str(&format!(
            "{} {} residual_terms={}",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.residual_terms
        ));
        if check.params.sample_points > 0 {
            s.push_str(&format!(" failing_points={}/{}", check.params.failing_points, check.params.sample_points));
        }
        if verbose {
            s.push_str(&format!(" spins={:?} runtime_ms={}", check.params.spins, check.runtime_ms));
        }
        s.push('\n');
        if let Some(w) = &check.witness {
            if verbose || !check.passed {
                s.push_str(&format!("    witness: {w}\n"));
            }
        }
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    s.push_str(&format!(
        "{} {}/{} checks passed\n",
        if report.passed { "PASS" } else { "FAIL" },
        passed,
        report.checks.len()
    ));
    s
}

/// Runs the configured suite, prints the text report to `out`, writes the
/// JSON report if requested, and returns the exit status.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let report = match execute(&config.verify) {
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_CONFIG;
        }
        Ok(Err(e @ (VerifyError::UnknownSuite(_) | VerifyError::Arity { .. } | VerifyError::InvalidConfig(_)))) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_CONFIG;
        }
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: computation failed: {e}");
            return EXIT_FAIL;
        }
        Ok(Ok(r)) => r,
    };
    let _ = out.write_all(render_text(&report, config.verbose).as_bytes());
    if let Some(path) = &config.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_CONFIG;
        }
    }
    if report.passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Entry point shared by the binary and the tests.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let code = e.exit_code();
            let _ = match &e {
                CliError::Usage(_) if code == EXIT_PASS => write!(out, "{e}"),
                CliError::Usage(_) => write!(err, "{e}"),
                CliError::Config(_) => writeln!(err, "{e}"),
            };
            code
        }
    }
}
