use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::output::Format;

/// Means generated by quotients of Jensen functionals: tables, scans,
/// threshold solving and verification of the comparison claims for λ_s.
#[derive(Debug, Parser)]
#[command(name = "intermean", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format (each command has its own default).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Tolerance on s for threshold bisection.
    #[arg(long, global = true, value_name = "X")]
    pub tol: Option<f64>,
    /// Grid density: t points for scan and verify, inner uniform points for thresholds.
    #[arg(long, global = true, value_name = "N")]
    pub grid: Option<usize>,
    /// Seed for the ChaCha8 generator used by Monte Carlo runs.
    #[arg(long, global = true, value_name = "K", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The six classical means of (a, b) and λ_s for each requested s, ascending.
    Compare {
        a: f64,
        b: f64,
        /// Orders s: a value, a list `x,y` or a range `lo:hi:n`; may repeat.
        #[arg(long = "s", value_name = "S", allow_hyphen_values = true)]
        s: Vec<String>,
    },
    /// λ_s/A and M/A for every classical M over an (s, t) grid.
    Scan {
        #[arg(long = "s", value_name = "S", allow_hyphen_values = true, default_value = "-4:6:11")]
        s: String,
        /// t values in [0, 1); defaults to `0:0.99:N` with N from --grid (100).
        #[arg(long = "t", value_name = "T")]
        t: Option<String>,
    },
    /// Critical exponents for each comparison of λ_s with a classical mean.
    Thresholds,
    /// Coefficients c_n (two formulas) and d_n in exact arithmetic.
    Series {
        #[arg(long = "n", value_name = "N", default_value_t = 20)]
        n: usize,
    },
    /// Grid verification of one part of the comparison claims (all parts by default).
    Verify {
        #[arg(long, value_name = "P")]
        part: Option<u8>,
        /// Orders to check instead of the default 50 per interval.
        #[arg(long = "s", value_name = "S", allow_hyphen_values = true)]
        s: Option<String>,
    },
    /// Moment report of a distribution and the cubic moment bounds.
    Moments {
        /// `uniform:lo,hi`, `two-point:x0,x1[,p1]`, `discrete:x1,x2,...` (or `x@w,...`), `constant:c`.
        #[arg(long, value_name = "SPEC")]
        dist: String,
        #[arg(long, value_name = "N", default_value_t = 100_000)]
        draws: usize,
        /// Exact moments instead of Monte Carlo estimates.
        #[arg(long)]
        analytic: bool,
    },
}
