//! Command-line front end.

mod commands;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::gf3m::{parse_trits, DEFAULT_MAX_K, HARD_MAX_K};

pub use commands::{run, Outcome};
pub use report::{report_write, Report, Table};

pub const MAX_K_ENV: &str = "TRINOLAB_MAX_K";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// `--t all` or a single element encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TArg {
    All,
    One(String),
}

fn parse_t(s: &str) -> std::result::Result<TArg, String> {
    if s.eq_ignore_ascii_case("all") {
        Ok(TArg::All)
    } else if s.is_empty() {
        Err("expected `all` or an element encoding".into())
    } else {
        Ok(TArg::One(s.to_string()))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "trinolab",
    version,
    about = "Exhaustive checks of permutation trinomials over GF(3^2k)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Largest accepted k (default 6, or $TRINOLAB_MAX_K). Large values can be slow.
    #[arg(long, global = true)]
    max_k: Option<u32>,

    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    parallelism: Option<usize>,

    /// Irreducible modulus of degree 2k, trits constant term first, e.g. "2,0,1".
    #[arg(long, global = true)]
    modulus: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Field parameters and special constants.
    FieldInfo {
        #[arg(long)]
        k: u32,
    },
    /// Elements of the subgroup of d-th roots of unity (default d = q + 1).
    Mu {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: Option<u64>,
    },
    /// Direct and criterion checks for one family trinomial.
    CheckTrinomial {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        family: u8,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u64,
    },
    /// Whether the family's fractional map permutes mu_(q+1).
    CheckG {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        family: u8,
        #[arg(long)]
        k: u32,
    },
    /// Roots in mu_(q+1) of the family's fiber equation, per t.
    CountRoots {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        family: u8,
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = parse_t, default_value = "all")]
        t: TArg,
    },
    /// Monic quadratic factors of a polynomial, or of a fiber equation.
    Factors {
        #[arg(long)]
        k: u32,
        /// Coefficient encodings, constant term first, e.g. "1,0,0,1".
        #[arg(long, conflicts_with_all = ["family", "t"])]
        poly: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3), requires = "t")]
        family: Option<u8>,
        #[arg(long, value_parser = parse_t, requires = "family")]
        t: Option<TArg>,
    },
    /// Harvest quadratic factors and check the factor relations on them.
    LemmaVerify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        family: u8,
        #[arg(long)]
        k: u32,
    },
    /// The (u, v) identity on factors of x^7 + (t-1)x^6 + (t-1)x - t.
    UvScan {
        #[arg(long)]
        k: u32,
    },
    /// All routes for every (family, k, l).
    Sweep {
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=3), default_value = "1,2,3")]
        family: Vec<u8>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        k: Vec<u32>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        l: Vec<u64>,
    },
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub output_format: Format,
    pub output_path: Option<PathBuf>,
    pub max_k: u32,
    pub parallelism: usize,
    pub modulus: Option<Vec<u8>>,
}

impl RunConfig {
    /// Parses arguments (program name first). `max_k_env` is the value of
    /// `TRINOLAB_MAX_K`, if set.
    pub fn from_args<I, T>(
        args: I,
        max_k_env: Option<&str>,
    ) -> std::result::Result<RunConfig, ArgError>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(ArgError::Clap)?;
        let max_k = match (cli.max_k, max_k_env) {
            (Some(m), _) => m,
            (None, Some(env)) => env.trim().parse().map_err(|_| {
                ArgError::Invalid(Error::Parse(format!(
                    "{MAX_K_ENV} must be a positive integer, got {env:?}"
                )))
            })?,
            (None, None) => DEFAULT_MAX_K,
        };
        if max_k == 0 || max_k > HARD_MAX_K {
            return Err(ArgError::Invalid(Error::Parse(format!(
                "max k must be in 1..={HARD_MAX_K}, got {max_k}"
            ))));
        }
        let parallelism = match cli.parallelism {
            Some(0) => {
                return Err(ArgError::Invalid(Error::Parse(
                    "parallelism must be at least 1".into(),
                )))
            }
            Some(p) => p,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        let modulus = cli
            .modulus
            .as_deref()
            .map(parse_trits)
            .transpose()
            .map_err(ArgError::Invalid)?;
        if let Command::Sweep { k, .. } = &cli.command {
            if modulus.is_some() {
                return Err(ArgError::Invalid(Error::Parse(
                    "--modulus is not accepted by sweep; rows use the default modulus".into(),
                )));
            }
            if let Some(&bad) = k.iter().find(|&&k| k == 0 || k > max_k) {
                return Err(ArgError::Invalid(Error::UnsupportedDegree {
                    k: bad,
                    max: max_k,
                }));
            }
        }
        Ok(RunConfig {
            command: cli.command,
            output_format: cli.format,
            output_path: cli.output,
            max_k,
            parallelism,
            modulus,
        })
    }
}

#[derive(Debug)]
pub enum ArgError {
    Clap(clap::Error),
    Invalid(Error),
}

/// Parses, runs and writes the report; returns the process exit code:
/// 0 on success, 1 on usage or input errors, 2 when a checked claim fails.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(MAX_K_ENV).ok();
    let config = match RunConfig::from_args(args, env.as_deref()) {
        Ok(c) => c,
        Err(ArgError::Clap(e)) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
        Err(ArgError::Invalid(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match execute(&config) {
        Ok(failures) if failures.is_empty() => ExitCode::SUCCESS,
        Ok(failures) => {
            for f in failures {
                eprintln!("assertion failed: {f}");
            }
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// Runs the command on a pool of `config.parallelism` workers and writes
/// the report. Returns the failed assertions.
pub fn execute(config: &RunConfig) -> Result<Vec<String>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    let outcome = pool.install(|| run(config))?;
    report_write(
        &outcome.report,
        config.output_format,
        config.output_path.as_deref(),
    )?;
    Ok(outcome.failures)
}
