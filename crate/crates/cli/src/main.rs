use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use epispec::OperatorKind;

mod commands;
mod range;

/// Spectral bisection with epidemic diffusion and Laplacian baselines.
#[derive(Debug, Parser)]
#[command(name = "epispec", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bisect a graph by sweep cut and print the partition as JSON.
    Partition(PartitionArgs),
    /// Draw a hierarchical benchmark graph and write PREFIX.edges and PREFIX.labels.
    Generate(GenerateArgs),
    /// Run the (mu1, mu2) grid experiment and emit NMI statistics.
    Sweep(SweepArgs),
    /// Normalized mutual information between two label files.
    Nmi(NmiArgs),
    /// Recompute the cut-quality table of the built-in 11-node graph.
    Toy(ToyArgs),
    /// Integrate du/dt = -M u with explicit Euler steps and print the trajectory as CSV.
    Diffuse(DiffuseArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Laplacian,
    Symmetric,
    RandomWalk,
    Replicator,
}

impl From<Method> for OperatorKind {
    fn from(m: Method) -> Self {
        match m {
            Method::Laplacian => OperatorKind::Laplacian,
            Method::Symmetric => OperatorKind::SymmetricNormalized,
            Method::RandomWalk => OperatorKind::RandomWalk,
            Method::Replicator => OperatorKind::Replicator,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Eigensolver residual tolerance.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Largest graph solved with dense eigendecomposition.
    #[arg(long, default_value_t = 512)]
    pub dense_threshold: usize,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Edge list: "u v [weight]" per line, '#' starts a comment.
    #[arg(long)]
    pub graph: PathBuf,
    /// Node indices in files and output start at 1.
    #[arg(long)]
    pub one_indexed: bool,
    /// Work on the largest connected component instead of rejecting a disconnected graph.
    #[arg(long)]
    pub largest_component: bool,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    #[arg(long, value_enum, default_value_t = Method::Replicator)]
    pub method: Method,
    /// Print a human-readable summary instead of JSON.
    #[arg(long)]
    pub pretty: bool,
    /// Include the ordering vector in the JSON output.
    #[arg(long)]
    pub ordering: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LayoutArgs {
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// Number of macro communities.
    #[arg(long = "macro", default_value_t = 2)]
    pub macro_count: usize,
    /// Micro communities per macro community.
    #[arg(long = "micro", default_value_t = 2)]
    pub micro_per_macro: usize,
    /// Target mean degree.
    #[arg(long, default_value_t = 10.0)]
    pub degree: f64,
    /// Random seed; falls back to EPISPEC_SEED, then 0.
    #[arg(long, env = "EPISPEC_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub layout: LayoutArgs,
    /// Fraction of edge stubs leaving the macro community.
    #[arg(long, default_value_t = 0.0)]
    pub mu1: f64,
    /// Fraction of edge stubs leaving the micro community within the macro community.
    #[arg(long, default_value_t = 0.0)]
    pub mu2: f64,
    /// Output prefix.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub one_indexed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub layout: LayoutArgs,
    /// Values of mu1 as start:stop:step, a comma list or a single value.
    #[arg(long, default_value = "0:0.5:0.05")]
    pub mu1: String,
    /// Values of mu2, same syntax as --mu1.
    #[arg(long, default_value = "0:0.5:0.05")]
    pub mu2: String,
    /// Graphs per cell.
    #[arg(long, default_value_t = 100)]
    pub runs: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "laplacian,symmetric,replicator")]
    pub methods: Vec<Method>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = GridFormat::Csv)]
    pub format: GridFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NmiArgs {
    /// Label file: "node label [label ...]" per line.
    pub a: PathBuf,
    pub b: PathBuf,
    /// Which label column to compare (1 = first label after the node index).
    #[arg(long, default_value_t = 1)]
    pub column: usize,
    #[arg(long)]
    pub one_indexed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ToyFormat {
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct ToyArgs {
    #[arg(long, value_enum, default_value_t = ToyFormat::Table)]
    pub format: ToyFormat,
}

#[derive(Debug, Args)]
pub struct DiffuseArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    #[arg(long, value_enum, default_value_t = Method::Replicator)]
    pub method: Method,
    /// Euler step; must be below 2 over the spectral radius of the operator.
    #[arg(long)]
    pub dt: f64,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    /// Keep every STRIDE-th state (the first and last are always kept).
    #[arg(long, default_value_t = 1)]
    pub stride: usize,
    /// Start from a unit mass on this node.
    #[arg(long, default_value_t = 0, conflicts_with = "init")]
    pub source: usize,
    /// Start from the values in this file, one per line in node order.
    #[arg(long)]
    pub init: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
}

fn main() -> ExitCode {
    let parsed = Cli::try_parse();
    // Dropped stubs are routine across a whole grid; the per-graph warnings
    // stay available through RUST_LOG.
    let filter = match &parsed {
        Ok(Cli {
            command: Command::Sweep(_),
        }) => "warn,epispec::benchmark::generator=error",
        _ => "warn",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(filter)).init();
    let cli = match parsed {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(commands::EXIT_USAGE);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.code)
        }
    }
}
