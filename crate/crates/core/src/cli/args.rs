use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use metric_lines::graph::PartSizes;

#[derive(Debug, Parser)]
#[command(name = "metric-lines", version, about = "Lines in graph metric spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Line system of a single graph.
    Lines(LinesArgs),
    /// Graph-class predicates of a single graph.
    Check(CheckArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// All connected graphs on n ≤ 7 vertices up to isomorphism, as graph6.
    Enumerate(EnumerateArgs),
    /// Emit graph6 for a family member or a random ℓC sample.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
#[group(skip)]
pub struct InputArgs {
    /// Inline graph6 string, or an edge list "n; u v; ...".
    #[arg(long, conflicts_with_all = ["file", "family"])]
    pub graph6: Option<String>,
    /// File with one graph6 record per line.
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    /// Family name: a named graph (K122, K222, H8_prime, ...), K<n>, P<n>,
    /// C<n>, W<n>, H<2k>, matched-cliques or multipartite.
    #[arg(long)]
    pub family: Option<String>,
    /// Clique size for matched-cliques.
    #[arg(long)]
    pub k: Option<usize>,
    /// Part sizes for multipartite, e.g. 1,2,2.
    #[arg(long)]
    pub parts: Option<PartSizes>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LinesArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Lc,
    Chordal,
    Biconnected,
    Bridges,
    Diameter,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Lc => "lc",
            Predicate::Chordal => "chordal",
            Predicate::Biconnected => "biconnected",
            Predicate::Bridges => "bridges",
            Predicate::Diameter => "diameter",
        }
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Comma-separated predicates.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "lc,chordal,biconnected,bridges,diameter")]
    pub pred: Vec<Predicate>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    MainTheorem,
    Diam3,
    Claims,
    Families,
    TheoremClass,
}

#[derive(Debug, Args)]
pub struct StreamArgs {
    /// Vertex count: exhaustive stream, or sample size with --random.
    #[arg(long)]
    pub n: Option<usize>,
    /// Sample random ℓC graphs instead of enumerating.
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 0.7)]
    pub p: f64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub stream: StreamArgs,
    /// Worker threads; defaults to available parallelism.
    #[arg(long, env = "METRIC_LINES_JOBS")]
    pub jobs: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub stream: StreamArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
