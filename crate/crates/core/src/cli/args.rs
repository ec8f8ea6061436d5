use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::report::Suite;

/// Environment variable naming the directory that relative `--out` paths
/// are resolved against.
pub const OUT_DIR_ENV: &str = "LANDAU_WEHRL_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "landau-wehrl",
    version,
    about = "Husimi densities, photon statistics and Wehrl entropies of Landau-level coherent states"
)]
pub struct Cli {
    /// Directory for relative output paths.
    #[arg(long, global = true, env = OUT_DIR_ENV, value_name = "DIR")]
    pub out_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a Husimi density at a point or over a lambda grid.
    Husimi(HusimiArgs),
    /// Wehrl entropy of a pure or thermal state.
    Entropy(EntropyArgs),
    /// Temperature minimizing the closed-form thermal entropy.
    MinEntropy(MinEntropyArgs),
    /// Closed-form thermal entropy as a function of temperature for m = 0..m-max.
    Fig1(Fig1Args),
    /// Photon-count distributions, optionally with a seeded Monte Carlo check.
    Dist(DistArgs),
    /// Large-deviation rate function.
    Rate(RateArgs),
    /// Run the registered claim checks and emit verification records.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Paper,
    Numeric,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Law {
    X,
    Y,
}

#[derive(Debug, Args)]
pub struct Temperature {
    /// Inverse temperature.
    #[arg(long, conflicts_with = "temperature")]
    pub beta: Option<f64>,
    /// Temperature T = 1/beta.
    #[arg(long)]
    pub temperature: Option<f64>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("state").required(true).args(["j", "beta", "temperature"])))]
#[command(group(ArgGroup::new("point").required(true).args(["lambda", "x", "grid"])))]
pub struct HusimiArgs {
    #[arg(long)]
    pub m: u32,
    /// Pure state index.
    #[arg(long)]
    pub j: Option<u32>,
    #[command(flatten)]
    pub temp: Temperature,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long, requires_all = ["y", "b_field"], allow_hyphen_values = true)]
    pub x: Option<f64>,
    #[arg(long, requires = "x", allow_hyphen_values = true)]
    pub y: Option<f64>,
    #[arg(long, requires = "x")]
    pub b_field: Option<f64>,
    /// Lambda grid "a:b:n" (n evenly spaced points, ends included).
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("state").required(true).args(["j", "beta", "temperature"])))]
pub struct EntropyArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub j: Option<u32>,
    #[command(flatten)]
    pub temp: Temperature,
    #[arg(long, value_enum, default_value = "numeric")]
    pub method: Method,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").required(true).args(["m", "max_m"])))]
pub struct MinEntropyArgs {
    #[arg(long)]
    pub m: Option<u32>,
    /// Tabulate m = 1..=max-m.
    #[arg(long)]
    pub max_m: Option<u32>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Fig1Args {
    #[arg(long, default_value_t = 8)]
    pub m_max: u32,
    /// Temperature grid "a:b:n".
    #[arg(long, default_value = "0.05:20:400")]
    pub t_grid: String,
    #[arg(long, default_value = "fig1.csv")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[arg(long, value_enum)]
    pub law: Law,
    /// Level index (law x), or the outcomes to list as "a..b" / "a..=b" / "a" (law y).
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub lambda: f64,
    #[command(flatten)]
    pub temp: Temperature,
    /// Draw this many samples and compare the empirical mean with the exact one.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RateArgs {
    #[command(flatten)]
    pub temp: Temperature,
    /// "a:b:n" or a comma-separated list.
    #[arg(long, default_value = "0.5,1,2,5")]
    pub xi_grid: String,
    /// Rate function of the pure-state limit instead of the thermal one.
    #[arg(long, conflicts_with_all = ["beta", "temperature"])]
    pub pure_limit: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    /// Exit with status 3 on any discrepancy not in the expected registry.
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
