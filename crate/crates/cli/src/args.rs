use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use demazure::weyl::DEFAULT_ORDER_CAP;

#[derive(Debug, Parser)]
#[command(name = "demazure", version, about = "Demazure characters, polytopes and semigroup cones")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Demazure character of V_lambda^w.
    Char(InstanceArgs),
    /// Vertices and inequalities of the Demazure polytope.
    Polytope(InstanceArgs),
    /// Lattice points of the Demazure polytope.
    Points(InstanceArgs),
    /// Segment of the polytope along a simple-root line through mu.
    Segment(SegmentArgs),
    /// All faces F(v, P_i) with their Levi checks.
    Faces(InstanceArgs),
    /// Generators, extremal rays and inequalities of the semigroup cone.
    Cone(ConeArgs),
    /// Hilbert basis of the semigroup of the cone.
    Hilbert(HilbertArgs),
    /// Saturation check for one instance.
    Saturate(SaturateArgs),
    /// Saturation checks over a box of weights and a set of group elements.
    Sweep(SweepArgs),
    /// Hilbert-basis and extremal-ray counts for every group element.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Cartan type letter (A-G).
    #[arg(long = "type")]
    pub lie_type: String,
    #[arg(long)]
    pub rank: usize,
    /// Refuse groups with more elements than this.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap_order: usize,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Comma-separated 1-based simple reflections, e.g. "1,2,1"; empty or "e" is the identity.
    #[arg(long, default_value = "")]
    pub word: String,
    /// Replace the word by a reduced word of its Demazure product.
    #[arg(long)]
    pub normalize_word: bool,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here (atomically) instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Dominant weight in fundamental-weight coordinates, e.g. "1,0".
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[command(flatten)]
    pub word: WordArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SegmentArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Point on the line, rational coordinates allowed ("1/2,-3").
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    /// 1-based index of the simple root giving the direction.
    #[arg(long)]
    pub index: usize,
}

#[derive(Debug, Args)]
pub struct ConeArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[command(flatten)]
    pub word: WordArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[command(flatten)]
    pub word: WordArgs,
    /// Emit the per-element count table instead of one basis.
    #[arg(long)]
    pub table: bool,
    /// Check that the basis consists of fundamental pairs with nonzero multiplicity.
    #[arg(long)]
    pub property_p: bool,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SaturateArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long)]
    pub property_p: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long)]
    pub property_p: bool,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Largest coordinate of the dominant weights swept.
    #[arg(long, default_value_t = 2)]
    pub max_coord: i64,
    /// Restrict to a single element.
    #[arg(long)]
    pub word: Option<String>,
    /// Restrict to elements of at most this length.
    #[arg(long)]
    pub max_length: Option<usize>,
    /// Use this many elements drawn without replacement.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also compute Hilbert bases and check property P per element.
    #[arg(long)]
    pub property_p: bool,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Directory for the instance cache (default: $DEMAZURE_CACHE_DIR, if set).
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}
