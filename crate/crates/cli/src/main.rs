mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "forestgraph", version, about = "Maximal forests and the forest graph operator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Maximum number of maximal forests to materialize per forest graph.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Vertex bound for root candidates and the verify corpus.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=7))]
    pub max_vertices: u64,

    /// Edge bound for root candidates.
    #[arg(long, global = true, default_value_t = 15, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_edges: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Seed for the randomized checks of `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Inline edge list, pairs separated by `,` or `;`, e.g. "0 1, 1 2, 2 0".
    #[arg(long, global = true, conflicts_with = "named")]
    pub edges: Option<String>,

    /// A standard graph by name: K5, C4, P3, E2, K3,3 or bowtie.
    #[arg(long, global = true)]
    pub named: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the maximal forests.
    Forests(InputArg),
    /// Count the maximal forests exactly.
    Count(InputArg),
    /// Build the forest graph.
    Fgraph {
        #[command(flatten)]
        input: InputArg,
        /// Write the vertex-to-forest mapping to this file.
        #[arg(long)]
        mapping: Option<std::path::PathBuf>,
        /// Vertices of a cycle of the input; prints the clique it induces in the forest graph.
        #[arg(long)]
        witness_cycle: Option<String>,
    },
    /// Exchange distance between two forests, by index in the forest listing.
    Distance(PairArgs),
    /// A shortest exchange path between two forests.
    Path(PairArgs),
    /// Apply the forest graph operator repeatedly.
    Iterate {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Decide whether iteration converges.
    Classify(InputArg),
    /// Check whether the graph is isomorphic to its forest graph.
    Stable(InputArg),
    /// Search for graphs whose forest graph is the input.
    Roots(InputArg),
    /// Certified lower bound on the root depth.
    Depth(InputArg),
    /// Apply a Whitney operation and check the forest family is unchanged.
    Whitney {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum)]
        op: WhitneyKind,
        /// identify: pairs `v:w` separated by commas.
        #[arg(long)]
        pairs: Option<String>,
        /// split: the cut vertex. twist: the first vertex of the separation pair.
        #[arg(long)]
        vertex: Option<String>,
        /// twist: the second vertex of the separation pair.
        #[arg(long)]
        other: Option<String>,
        /// Vertices on the moved side, comma or space separated.
        #[arg(long)]
        side: Option<String>,
    },
    /// Run the self-check suite over the small-graph corpus.
    Verify,
    /// Print graphs: every graph on `--vertices N` up to isomorphism, or `--named`.
    Gen {
        #[arg(long)]
        vertices: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WhitneyKind {
    Identify,
    Split,
    Twist,
    /// A random applicable operation drawn with `--seed`.
    Random,
}

#[derive(Args, Debug, Clone)]
pub struct InputArg {
    /// Edge-list or DOT file; `-` reads standard input.
    pub input: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
}

/// A failure with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<forestgraph::Error> for Failure {
    fn from(e: forestgraph::Error) -> Self {
        use forestgraph::Error;
        let code = match e {
            Error::Input(_) | Error::Parse { .. } => 2,
            Error::Budget { .. } | Error::Resource(_) => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli);
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(f) => {
            let _ = stdout.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
