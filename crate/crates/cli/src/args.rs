use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "pcd", version, about = "Relative arc density tests with r-factor proximity catch digraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test a point pattern against fixed reference sites.
    Test(TestArgs),
    /// Monte Carlo critical value, significance and power.
    Simulate(SimulateArgs),
    /// Analytic curves on an r grid, as CSV.
    Curves(CurvesArgs),
    /// Pitman or Hodges-Lehmann efficacy at one or more r values.
    Efficacy(EfficacyArgs),
    /// Delaunay triangulation of the reference sites.
    MeshInfo(MeshInfoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AltKind {
    Null,
    Segregation,
    Association,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Curve {
    Mu,
    Nu,
    Omega,
    Pae,
    Hlae,
    Power,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EfficacyKind {
    Pae,
    Hlae,
}

#[derive(Debug, Args, Serialize)]
pub struct TestArgs {
    /// CSV of tested points (columns x,y, header optional).
    #[arg(long, short = 'x')]
    pub points: PathBuf,
    /// CSV of reference sites; three sites give the single-triangle test.
    #[arg(long, short = 'y')]
    pub sites: PathBuf,
    /// Expansion factor(s), comma separated; "inf" and expressions such as 3/2 are accepted.
    #[arg(long, short = 'r', value_delimiter = ',', default_value = "1.5")]
    pub r: Vec<String>,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// Points outside the hull are dropped instead of rejected.
    #[arg(long)]
    pub drop_outside: bool,
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    #[arg(long, value_enum, default_value_t = AltKind::Null)]
    pub alt: AltKind,
    /// Alternative parameter, e.g. 0.2165 or sqrt3/8.
    #[arg(long)]
    pub eps: Option<String>,
    /// Expansion factor; accepts expressions such as sqrt2 or 4/3.
    #[arg(long, short = 'r', default_value = "1.5")]
    pub r: String,
    #[arg(long, short = 'n', default_value_t = 10)]
    pub n: usize,
    /// Number of Monte Carlo replicates.
    #[arg(long = "replicates", short = 'N', default_value_t = 10_000)]
    pub replicates: usize,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    /// Use the normal-approximation critical value instead of the empirical one.
    #[arg(long)]
    pub use_asymptotic_cv: bool,
    /// Include the sorted replicate densities in the output.
    #[arg(long)]
    pub samples: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct CurvesArgs {
    /// Curves to tabulate, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "mu,nu")]
    pub which: Vec<Curve>,
    #[arg(long, default_value = "1")]
    pub from: String,
    #[arg(long, default_value = "6")]
    pub to: String,
    #[arg(long, default_value = "0.01")]
    pub step: String,
    /// Explicit r values, comma separated; overrides the grid.
    #[arg(long, short = 'r', value_delimiter = ',')]
    pub r: Vec<String>,
    /// Alternative for hlae and power.
    #[arg(long, value_enum)]
    pub alt: Option<AltKind>,
    #[arg(long)]
    pub eps: Option<String>,
    #[arg(long, short = 'n', default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct EfficacyArgs {
    #[arg(long, value_enum, default_value_t = EfficacyKind::Pae)]
    pub kind: EfficacyKind,
    #[arg(long, value_enum, default_value_t = AltKind::Segregation)]
    pub alt: AltKind,
    /// Required for hlae; must be one of the tabulated values.
    #[arg(long)]
    pub eps: Option<String>,
    #[arg(long, short = 'r', value_delimiter = ',', default_value = "1.5")]
    pub r: Vec<String>,
    /// Reference sites; their Delaunay weights give the multi-triangle efficacy.
    #[arg(long, short = 'y')]
    pub sites: Option<PathBuf>,
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct MeshInfoArgs {
    #[arg(long, short = 'y')]
    pub sites: PathBuf,
    /// Also report the conditional null moments at these r values.
    #[arg(long, short = 'r', value_delimiter = ',')]
    pub r: Vec<String>,
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}
