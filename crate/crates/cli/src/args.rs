use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Largest `n` for which every admissible multiset is known to be realizable.
pub const VERIFIED_LIMIT: usize = 37;

#[derive(Debug, Parser)]
#[command(
    name = "circlepath",
    version,
    about = "Chord-length multisets and distinct lengths of Hamiltonian paths on points of a circle"
)]
pub struct Cli {
    /// human-readable output instead of JSON lines
    #[arg(long, global = true)]
    pub pretty: bool,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// worker threads for campaigns and length scans (default: all cores)
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count all or admissible multisets.
    Count(CountArgs),
    /// Find a path realizing a multiset.
    Realize(RealizeArgs),
    /// Realize every admissible multiset, with a resumable checkpoint.
    Campaign(CampaignArgs),
    /// Identity space: dimension, basis, essential set, improper identity.
    Identities(IdentitiesArgs),
    /// Count distinct path lengths.
    Lengths(LengthsArgs),
    /// Diff computed values against an OEIS b-file.
    Oeis(OeisArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").args(["all", "admissible"])))]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    /// |M_n| only
    #[arg(long)]
    pub all: bool,
    /// |A_n| only
    #[arg(long)]
    pub admissible: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Hillclimb,
    Lds,
    Mixed,
}

#[derive(Debug, Args)]
pub struct RealizeArgs {
    #[arg(long)]
    pub n: usize,
    /// counts of chord types 1..n/2, comma separated
    #[arg(long)]
    pub multiset: String,
    #[arg(long, value_enum, default_value_t = Method::Mixed)]
    pub method: Method,
    /// hill-climbing iteration cap
    #[arg(long, default_value_t = 100_000)]
    pub max_iters: u64,
    /// LDS discrepancy cap (default: n - 1, a complete search)
    #[arg(long)]
    pub max_discrepancy: Option<usize>,
    /// LDS node budget
    #[arg(long)]
    pub node_budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CampaignArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Method::Mixed)]
    pub method: Method,
    /// checkpoint file (default: campaign-n<N>.bhrc in the checkpoint directory)
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long, env = "BHR_CHECKPOINT_DIR", default_value = ".")]
    pub checkpoint_dir: PathBuf,
    /// first rank of the range
    #[arg(long)]
    pub from: Option<u128>,
    /// end rank of the range, exclusive
    #[arg(long)]
    pub to: Option<u128>,
    #[arg(long, default_value_t = 200)]
    pub hill_iters: u64,
    #[arg(long, default_value_t = 8)]
    pub hill_restarts: u32,
    #[arg(long)]
    pub max_discrepancy: Option<usize>,
}

#[derive(Debug, Args)]
#[command(group(
    ArgGroup::new("mode")
        .args(["dimension", "basis", "essential", "improper"])
        .required(true)
))]
pub struct IdentitiesArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub dimension: bool,
    #[arg(long)]
    pub basis: bool,
    /// bounded identities reduced to the essential set
    #[arg(long)]
    pub essential: bool,
    /// print only the counts of the essential mode
    #[arg(long, requires = "essential")]
    pub counts_only: bool,
    #[arg(long)]
    pub improper: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LengthMethod {
    Exact,
    Numeric,
}

#[derive(Debug, Args)]
pub struct LengthsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = LengthMethod::Exact)]
    pub method: LengthMethod,
    /// fractional bits for the numeric method
    #[arg(long, default_value_t = 128)]
    pub bits: u32,
    /// count lengths of admissible multisets beyond the verified range
    #[arg(long)]
    pub assume_conjecture: bool,
}

#[derive(Debug, Args)]
pub struct OeisArgs {
    /// A030077 or A352568
    #[arg(long)]
    pub sequence: String,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub bfile: PathBuf,
    #[arg(long)]
    pub assume_conjecture: bool,
}
