use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vq_chartab::character::RawLabel;
use vq_chartab::prime::{validate_prime, DEFAULT_PRIME_BOUND};
use vq_chartab::Error;

pub const CACHE_ENV: &str = "VQCHAR_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "vqchar",
    version,
    about = "Exact character tables and Frobenius-Schur indicators for (C_p x C_p) ⋊ Q8"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to PATH (atomically) instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Directory for cached character tables.
    #[arg(long, global = true, value_name = "DIR", env = CACHE_ENV)]
    pub cache: Option<PathBuf>,

    /// Largest prime accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME_BOUND)]
    pub max_prime: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify the counterexample for one prime and label.
    Verify(VerifyArgs),
    /// Emit the full character table.
    Table(PrimeArg),
    /// Verify every orbit-representative label for a range of primes.
    Scan(ScanArgs),
    /// Run every structural invariant check for one prime.
    Selftest(PrimeArg),
}

#[derive(Debug, Args)]
pub struct PrimeArg {
    #[arg(long)]
    pub prime: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub prime: u32,
    /// Character λ_(a,b) of V, written a,b; defaults to the smallest nontrivial one.
    #[arg(long, value_name = "a,b")]
    pub label: Option<RawLabel>,
    /// Also verify against a second quaternion subgroup of SL_2(p).
    #[arg(long)]
    pub alt_subgroup: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Inclusive prime range A..B.
    #[arg(long, value_name = "A..B")]
    pub primes: PrimeRange,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Also verify against a second quaternion subgroup of SL_2(p).
    #[arg(long)]
    pub alt_subgroup: bool,
    /// Leave timing fields out so output is byte-stable.
    #[arg(long)]
    pub no_timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeRange {
    pub lo: u32,
    pub hi: u32,
}

impl FromStr for PrimeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
        let lo = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad lower bound in {s:?}"))?;
        let hi = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad upper bound in {s:?}"))?;
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(PrimeRange { lo, hi })
    }
}

/// What a subcommand needs, after validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Verify { prime: u32, label: Option<RawLabel> },
    Table { prime: u32 },
    Scan { primes: Vec<u32> },
    Selftest { prime: u32 },
}

/// Validated run configuration.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub subject: Subject,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub jobs: usize,
    pub alt_subgroup: bool,
    pub timings: bool,
    pub prime_bound: u32,
}

impl CliConfig {
    /// Primes are checked here, before any computation starts.
    pub fn from_cli(cli: Cli) -> Result<Self, Error> {
        let bound = cli.max_prime;
        let mut jobs = 1;
        let mut alt_subgroup = false;
        let mut timings = true;
        let subject = match cli.command {
            Command::Verify(a) => {
                validate_prime(a.prime, bound)?;
                if let Some(RawLabel(x, y)) = a.label {
                    if x >= a.prime || y >= a.prime {
                        return Err(Error::Usage(format!(
                            "label entries must lie in [0, {})",
                            a.prime
                        )));
                    }
                    if (x, y) == (0, 0) {
                        return Err(Error::Usage("label must be nontrivial".into()));
                    }
                }
                alt_subgroup = a.alt_subgroup;
                Subject::Verify {
                    prime: a.prime,
                    label: a.label,
                }
            }
            Command::Table(a) => Subject::Table {
                prime: validate_prime(a.prime, bound)?,
            },
            Command::Selftest(a) => Subject::Selftest {
                prime: validate_prime(a.prime, bound)?,
            },
            Command::Scan(a) => {
                let PrimeRange { lo, hi } = a.primes;
                if hi > bound {
                    return Err(Error::Usage(format!(
                        "range end {hi} exceeds the configured bound {bound}"
                    )));
                }
                let primes = vq_chartab::prime::odd_primes_in(lo, hi);
                if primes.is_empty() {
                    return Err(Error::Usage(format!("no odd primes in {lo}..{hi}")));
                }
                if a.jobs == 0 {
                    return Err(Error::Usage("--jobs must be at least 1".into()));
                }
                jobs = a.jobs;
                alt_subgroup = a.alt_subgroup;
                timings = !a.no_timings;
                Subject::Scan { primes }
            }
        };
        Ok(CliConfig {
            subject,
            format: cli.format,
            out: cli.out,
            cache_dir: cli.cache,
            jobs,
            alt_subgroup,
            timings,
            prime_bound: bound,
        })
    }
}
