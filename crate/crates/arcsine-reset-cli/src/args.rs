//! Command-line surface. Every value-carrying flag is an `Option` so that a
//! JSON config file can supply defaults; explicit flags always win the merge
//! (see [`crate::config`]).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "arcsine-reset",
    version,
    about = "Arcsine-law functionals of Brownian motion under Poissonian resetting",
    long_about = "Evaluate closed-form densities and moments of the occupation \
fraction and the last zero of a reset Brownian bridge window, draw reproducible \
Monte Carlo ensembles of all three arcsine functionals, validate the samplers \
against the closed forms, and fit the empirical mean of the argmax time.\n\n\
The environment variable ARCSINE_RESET_STEP_BUDGET caps the total number of \
path steps a single invocation may request."
)]
pub struct Cli {
    /// JSON config file mirroring the flags; explicit flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Output format (default: csv, except fit-mr which defaults to json).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Output path; stdout when omitted.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a probability density on interior points of the time window.
    Pdf(PdfArgs),
    /// Closed-form moments: central for the occupation fraction, raw for the
    /// last zero.
    Moments(MomentsArgs),
    /// Draw a seeded Monte Carlo ensemble of window functionals.
    Simulate(SimulateArgs),
    /// Check sampler output against the closed forms; exits 4 on violation.
    Validate(ValidateArgs),
    /// Fit the empirical mean argmax-time curve over a rate grid.
    FitMr(FitMrArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Law {
    /// Occupation fraction of the positive half-line.
    #[value(name = "T")]
    T,
    /// Last visit to the origin.
    #[value(name = "L")]
    L,
    /// Occupation fraction conditioned on the number of resets.
    #[value(name = "Tk")]
    Tk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MomentLaw {
    /// Central moments of the occupation fraction.
    #[value(name = "T")]
    T,
    /// Raw moments of the last zero.
    #[value(name = "L")]
    L,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Functional {
    #[value(name = "T")]
    T,
    #[value(name = "L")]
    L,
    /// Argmax time; only the path method can produce it.
    #[value(name = "M")]
    M,
    /// All three functionals plus the realized reset count.
    #[value(name = "all")]
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Euler-Maruyama path simulation with exact reset times.
    Path,
    /// Exact two-stage samplers (reset count, then the conditional law).
    Composition,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::T => "T",
            Law::L => "L",
            Law::Tk => "Tk",
        }
    }
}

impl MomentLaw {
    pub fn name(self) -> &'static str {
        match self {
            MomentLaw::T => "T",
            MomentLaw::L => "L",
        }
    }
}

impl Functional {
    pub fn name(self) -> &'static str {
        match self {
            Functional::T => "T",
            Functional::L => "L",
            Functional::M => "M",
            Functional::All => "all",
        }
    }
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Path => "path",
            Method::Composition => "composition",
        }
    }
}

#[derive(Debug, Args)]
pub struct PdfArgs {
    /// Which law to evaluate.
    #[arg(long, value_enum, ignore_case = true)]
    pub law: Option<Law>,

    /// Reset rate (laws T and L).
    #[arg(long)]
    pub r: Option<f64>,

    /// Conditioning reset count (law Tk only).
    #[arg(long)]
    pub k: Option<u32>,

    /// Evaluation times in (0,1), comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub t: Option<Vec<f64>>,

    /// Evaluate on N evenly spaced interior points i/(N+1) instead of --t.
    #[arg(long, value_name = "N", conflicts_with = "t")]
    pub grid: Option<usize>,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    /// Which family of moments.
    #[arg(long, value_enum, ignore_case = true)]
    pub law: Option<MomentLaw>,

    /// Reset rates, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub r: Option<Vec<f64>>,

    /// Moment orders, comma separated (central j for T, raw n >= 1 for L).
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub orders: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Which functional(s) to emit.
    #[arg(long, value_enum, ignore_case = true)]
    pub functional: Option<Functional>,

    /// Reset rate.
    #[arg(long)]
    pub r: Option<f64>,

    /// Ensemble size.
    #[arg(long)]
    pub n: Option<usize>,

    /// Path time step (path method only).
    #[arg(long)]
    pub dt: Option<f64>,

    /// Master seed; the ensemble is byte-identical for any worker count.
    #[arg(long)]
    pub seed: Option<u64>,

    /// Sampling method.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Reset rates to validate, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub r: Option<Vec<f64>>,

    /// Ensemble size per rate and sampler.
    #[arg(long)]
    pub n: Option<usize>,

    /// Path time step.
    #[arg(long)]
    pub dt: Option<f64>,

    /// Master seed.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct FitMrArgs {
    /// Rate grid (>= 8 points spanning at least [0.5, 20]), comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub r: Option<Vec<f64>>,

    /// Ensemble size per grid point.
    #[arg(long)]
    pub n: Option<usize>,

    /// Path time step.
    #[arg(long)]
    pub dt: Option<f64>,

    /// Master seed.
    #[arg(long)]
    pub seed: Option<u64>,
}
