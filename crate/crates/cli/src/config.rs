use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cozero_core::eigen::SolverOptions;
use cozero_core::graph::DEFAULT_VERTEX_CAP;
use cozero_core::number_theory::Factorization;
use cozero_core::spectrum::{VerifyOptions, DEFAULT_COMPARE_TOL};

#[derive(Debug, Parser)]
#[command(name = "cozero", version, about = "Laplacian spectra of cozero-divisor graphs of Z_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Tolerance for spectrum comparison and integrality.
    #[arg(long, default_value_t = DEFAULT_COMPARE_TOL, global = true)]
    pub tol: f64,
    /// Absolute tolerance for merging eigenvalues into multiplicity groups.
    #[arg(long, default_value_t = SolverOptions::default().merge_tol, global = true)]
    pub merge_tol: f64,
    /// Vertex cap for building the full graph.
    #[arg(long, env = "COZERO_CAP", default_value_t = DEFAULT_VERTEX_CAP, global = true)]
    pub cap: u64,
    /// Omit the generated_at / elapsed fields so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    /// Worker threads for scans (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Laplacian spectrum of Γ'(Z_n) assembled from the divisor quotient.
    Spectrum { n: u64 },
    /// Compare the assembled spectrum with a brute-force eigensolve of the full graph.
    Verify {
        n: u64,
        /// Also check every edge against enumerated principal ideals.
        #[arg(long)]
        check_definition: bool,
    },
    /// Verify every eligible n in [lo, hi].
    Scan {
        lo: u64,
        hi: u64,
        #[arg(long, value_enum, default_value_t = Family::All)]
        filter: Family,
    },
    /// Quotient graph, class sizes and weighted degrees.
    Structure {
        n: u64,
        /// With --format dot, emit the vertex-level graph instead of the quotient.
        #[arg(long)]
        full: bool,
    },
    /// Laplacian-integrality census over n or [lo, hi].
    Integrality {
        lo: u64,
        hi: Option<u64>,
        #[arg(long, value_enum, default_value_t = Family::All)]
        filter: Family,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

/// Which composite `n` a range command visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Every non-prime n.
    All,
    /// Two distinct primes, both to the first power.
    Pq,
    /// p²q.
    P2q,
    /// pⁿq with n ≥ 2.
    #[value(name = "png-q")]
    PnQ,
    /// Exactly two distinct primes, any exponents.
    #[value(name = "general2prime")]
    General2Prime,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::All => "all",
            Family::Pq => "pq",
            Family::P2q => "p2q",
            Family::PnQ => "png-q",
            Family::General2Prime => "general2prime",
        }
    }

    pub fn contains(self, f: &Factorization) -> bool {
        if f.is_prime() {
            return false;
        }
        let mut exps: Vec<u32> = f.factors().iter().map(|&(_, e)| e).collect();
        exps.sort_unstable();
        match self {
            Family::All => true,
            Family::Pq => exps == [1, 1],
            Family::P2q => exps == [1, 2],
            Family::PnQ => exps.len() == 2 && exps[0] == 1 && exps[1] >= 2,
            Family::General2Prime => exps.len() == 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Single(u64),
    Range { lo: u64, hi: u64 },
}

/// Validated view of the command line.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub tol: f64,
    pub merge_tol: f64,
    pub cap: u64,
    pub timestamp: bool,
    pub jobs: usize,
}

impl RunConfig {
    pub fn from_args(args: &GlobalArgs) -> Result<Self, String> {
        for (name, value) in [("--tol", args.tol), ("--merge-tol", args.merge_tol)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(format!("{name} must be a positive number, got {value}"));
            }
        }
        Ok(Self {
            format: args.format,
            tol: args.tol,
            merge_tol: args.merge_tol,
            cap: args.cap,
            timestamp: !args.no_timestamp,
            jobs: args.jobs,
        })
    }

    pub fn solver(&self) -> SolverOptions {
        SolverOptions { merge_tol: self.merge_tol, ..SolverOptions::default() }
    }

    pub fn verify(&self, check_definition: bool) -> VerifyOptions {
        VerifyOptions { vertex_cap: self.cap, tol: self.tol, solver: self.solver(), check_definition }
    }
}

pub fn validate_n(n: u64) -> Result<u64, String> {
    if n < 2 {
        return Err(format!("n must be at least 2, got {n}"));
    }
    Ok(n)
}

pub fn validate_range(lo: u64, hi: u64) -> Result<Target, String> {
    if lo < 2 || lo > hi {
        return Err(format!("range must satisfy 2 <= lo <= hi, got [{lo}, {hi}]"));
    }
    Ok(Target::Range { lo, hi })
}
