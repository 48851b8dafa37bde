//! Argument surface of the laboratory binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "sle-lab",
    version,
    about = "Dipolar SLE laboratory: strip traces, visiting probabilities, endpoint ensembles, and the critical Ising interface experiment"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Size of the worker thread pool (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate one trace and export it as CSV.
    Trace(TraceArgs),
    /// Tabulate the visiting probabilities on a grid.
    Field(FieldArgs),
    /// Sample upper-boundary endpoints and compare with the excursion law.
    SleEndpoints(EndpointArgs),
    /// Run the critical Ising interface experiment at one size.
    Ising(IsingArgs),
    /// Run the Ising experiment over several sizes and fit the decay of the
    /// distribution distance.
    IsingScaling(ScalingArgs),
}

#[derive(Debug, Args, serde::Serialize)]
pub struct TraceArgs {
    #[arg(long)]
    pub kappa: f64,
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,
    #[arg(long, env = "SLE_LAB_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Freeze the driving at zero (deterministic vertical trace).
    #[arg(long, default_value_t = false)]
    pub constant_driving: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, serde::Serialize)]
pub struct FieldArgs {
    #[arg(long)]
    pub kappa: f64,
    /// Grid resolution as COLSxROWS, e.g. 41x21.
    #[arg(long, default_value = "41x21")]
    pub grid: String,
    /// Half-width of the tabulated window in Re z.
    #[arg(long, default_value_t = 5.0)]
    pub re_max: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, serde::Serialize)]
pub struct EndpointArgs {
    #[arg(long)]
    pub kappa: f64,
    #[arg(long, default_value_t = 1000)]
    pub n_traces: usize,
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    #[arg(long, default_value_t = 25.0)]
    pub t_max: f64,
    #[arg(long, env = "SLE_LAB_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Also evolve the sign-flipped driving of every stream; endpoints come
    /// out exactly antisymmetric.
    #[arg(long, default_value_t = false)]
    pub mirrored: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, serde::Serialize)]
pub struct IsingArgs {
    #[arg(long = "L")]
    pub l: usize,
    #[arg(long, default_value_t = 5000)]
    pub n_samples: usize,
    #[arg(long, env = "SLE_LAB_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Use the full published sample count (320,000) instead of the default.
    #[arg(long, default_value_t = false)]
    pub paper_scale: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, serde::Serialize)]
pub struct ScalingArgs {
    /// Strip heights; repeat the flag for several sizes.
    #[arg(long = "L")]
    pub l: Vec<usize>,
    #[arg(long, default_value_t = 5000)]
    pub n_samples: usize,
    #[arg(long, env = "SLE_LAB_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Use the published protocol scale: sizes 10, 14, 20, 26, 40 with
    /// 320,000 samples each (long-running).
    #[arg(long, default_value_t = false)]
    pub paper_scale: bool,
    #[arg(long)]
    pub out: PathBuf,
}
