//! The `ncspectra` command line.
//!
//! Exit codes: 0 success, 2 usage or domain error, 3 numeric failure
//! (overflow, ambiguous oracle matching, or a failed verification).

mod output;
mod verify;

pub use output::{parse_csv, parse_json, write_records, Format, OutputRecord, CSV_COLUMNS};
pub use verify::{
    bopp_suite, cg_suite, oracle_suite, radial_suite, residual_scaling, run_suites, Check, ResidualScaling, Suite,
    SuiteReport, ORACLE_N_MAX, ORACLE_THETA,
};

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::angular::{cg_half, HalfInt, UncoupledState};
use crate::radial::{expect_inv_r3_closed, radial_expectation, QuadratureSpec, DEFAULT_NODE_COUNT};
use crate::rational;
use crate::spectrum::{lamb_split_report, level_table, LambReport, Mode, ThetaVector};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Overrides the default quadrature node count.
pub const NODES_ENV: &str = "NCSPECTRA_QUAD_NODES";

#[derive(Debug, Parser)]
#[command(name = "ncspectra", version, about = "Hydrogen levels with first-order non-commutative corrections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Spinless,
    Spinful,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Spinless => Mode::Spinless,
            ModeArg::Spinful => Mode::Spinful,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Level table for all states with n <= nmax.
    Levels {
        #[arg(long)]
        nmax: u32,
        /// theta components in a0^2.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta_x: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta_y: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta_z: f64,
        #[arg(long, value_enum, default_value_t = ModeArg::Spinless)]
        mode: ModeArg,
        /// Reduced mass in electron masses.
        #[arg(long)]
        mu: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Spin-1/2 Clebsch-Gordan coefficient <l, jz-sz; 1/2, sz | j, jz>.
    Cg {
        #[arg(long)]
        l: u32,
        #[arg(long, allow_hyphen_values = true)]
        two_j: i32,
        #[arg(long, allow_hyphen_values = true)]
        two_jz: i32,
        #[arg(long, allow_hyphen_values = true)]
        two_sz: i32,
    },
    /// Run invariant suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// n = 2 level splitting report.
    Lamb {
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta_z: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Radial expectation <r^power>, closed form beside quadrature.
    Expect {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, allow_hyphen_values = true)]
        power: i32,
        #[arg(long)]
        nodes: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Parse { .. } => Failure::Usage(e.to_string()),
            Error::Overflow(_) | Error::AmbiguousOverlap { .. } => Failure::Numeric(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Numeric(format!("output error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Numeric(format!("output error: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Numeric(format!("output error: {e}"))
    }
}

/// Parses `args` (program name first), writes results to `out`, returns the exit code.
/// Diagnostics go to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
        Err(e) => {
            let _ = e.print();
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("error: {msg}");
            EXIT_NUMERIC
        }
    }
}

fn finite(name: &str, v: f64) -> Result<f64, Failure> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Failure::Usage(format!("--{name} must be finite")))
    }
}

fn quadrature_spec(nodes: Option<usize>) -> Result<QuadratureSpec, Failure> {
    let count = match nodes {
        Some(n) => n,
        None => match std::env::var(NODES_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{NODES_ENV}={v:?} is not a node count")))?,
            Err(_) => DEFAULT_NODE_COUNT,
        },
    };
    Ok(QuadratureSpec::with_nodes(count)?)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Levels { nmax, theta_x, theta_y, theta_z, mode, mu, format } => {
            if nmax == 0 {
                return Err(Failure::Usage("--nmax must be at least 1".into()));
            }
            let theta = ThetaVector::new(finite("theta-x", theta_x)?, finite("theta-y", theta_y)?, finite("theta-z", theta_z)?);
            let levels = level_table(nmax, &theta, mode.into(), mu)?;
            let records: Vec<OutputRecord> = levels.iter().map(OutputRecord::from).collect();
            write_records(out, &records, format)?;
        }
        Command::Cg { l, two_j, two_jz, two_sz } => {
            let c = cg_half(l, HalfInt::from_twice(two_j), HalfInt::from_twice(two_jz), HalfInt::from_twice(two_sz))?;
            writeln!(out, "{c}  {:.12}", c.value())?;
        }
        Command::Verify { suite } => {
            let reports = run_suites(suite, &quadrature_spec(None)?)?;
            let mut all = true;
            for r in &reports {
                writeln!(out, "{r}\n")?;
                all &= r.passed();
            }
            writeln!(out, "overall: {}", if all { "PASS" } else { "FAIL" })?;
            return Ok(if all { EXIT_OK } else { EXIT_NUMERIC });
        }
        Command::Lamb { theta_z, format } => write_lamb(out, &lamb_split_report(finite("theta-z", theta_z)?)?, format)?,
        Command::Expect { n, l, power, nodes } => {
            let spec = quadrature_spec(nodes)?;
            UncoupledState::new(n, l, 0)?;
            let numeric = if 2 * i64::from(l) + 2 + i64::from(power) < 1 {
                "divergent at r = 0".to_string()
            } else {
                format!("{:.10}", radial_expectation(n, l, power, &spec)?.value)
            };
            let closed = match (power, l) {
                (-3, 0) => "excluded (l=0)".to_string(),
                (-3, _) => {
                    let q = expect_inv_r3_closed(n, l)?;
                    format!("{q} = {:.10}", rational::to_f64(&q))
                }
                _ => "-".to_string(),
            };
            writeln!(out, "<r^{power}> for n={n}, l={l} ({} nodes)", spec.node_count())?;
            writeln!(out, "closed   {closed}")?;
            writeln!(out, "numeric  {numeric}")?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct LambJson<'a> {
    #[serde(flatten)]
    report: &'a LambReport,
    plot: Vec<(String, f64)>,
}

fn write_lamb(out: &mut dyn Write, report: &LambReport, format: Format) -> Result<(), Failure> {
    match format {
        Format::Table => writeln!(out, "{report}")?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &LambJson { report, plot: report.plot_points() })?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["label", "shift_coeff_num", "shift_coeff_den", "shift_hartree"])?;
            let rows = std::iter::once(&report.s_half).chain(&report.p_half).chain(&report.p_three_halves);
            for s in rows {
                w.write_record([
                    s.label.clone(),
                    s.shift_coeff.numer().to_string(),
                    s.shift_coeff.denom().to_string(),
                    s.shift_hartree.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
