//! `asc`: inspect graphs, check the almost self-centered property, build
//! embeddings and compute exact indices.

mod commands;
mod error;
mod input;
mod render;

use asc_core::constructions::Method;
use asc_core::graph::FamilySpec;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

const FAMILY_HELP: &str = "\
Graph input is exactly one of:
  INPUT             graph6 string, a file holding graph6 or an edge list, or '-' for stdin
  --family SPEC     a generated family, grammar name[:p1[,p2]]

Families: path:n, cycle:n, complete:n, star:l, complete_bipartite:a,b,
  cocktail_party:n, k1_join_matchings:t, caterpillar:n,k, gadget_c_star:m,
  gadget_c_prime:m, gadget_c8_double, petersen

Edge lists start with a header 'n m' followed by m lines 'u v' (0-based).

Exit status: 0 success, 1 precondition or invalid manifest, 2 parse error, 3 budget exhausted.";

#[derive(Parser)]
#[command(name = "asc", version, about = "Almost self-centered graph analysis", after_help = FAMILY_HELP)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// graph6 string, graph file, or '-' for graph6/edge list on stdin.
    input: Option<String>,

    /// Family spec name[:p1[,p2]], e.g. caterpillar:12,6.
    #[arg(long, value_parser = parse_family)]
    family: Option<FamilySpec>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Stop after this many candidate hosts.
    #[arg(long)]
    max_candidates: Option<u64>,

    /// Stop after this many seconds.
    #[arg(long)]
    max_time: Option<f64>,

    /// Run without a candidate or time limit.
    #[arg(long, conflicts_with_all = ["max_candidates", "max_time"])]
    unlimited: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Order, size and eccentricity profile.
    Info {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Whether the graph is almost self-centered, and for which radius.
    Check {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Run the sufficient conditions for the 3-ASC index of a diameter-2 graph.
    Classify {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Embed the graph into an r-ASC host.
    Embed {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 3)]
        r: u32,
        /// Construction to use; picks the smallest applicable one when omitted.
        #[arg(long, value_parser = parse_method)]
        method: Option<Method>,
        /// Also write the manifest here (plus OUT.edges for hosts beyond graph6).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the exact r-ASC index by exhaustive search.
    Index {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 3)]
        r: u32,
        /// Largest number of added vertices to try.
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Also write the certificate here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest order of an r-ASC graph by enumeration.
    Smallest {
        #[arg(long, default_value_t = 3)]
        r: u32,
        /// Largest order to enumerate.
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// Enumerate every order from 2, not just from the order lower bound.
        #[arg(long)]
        verify_below: bool,
    },
    /// Print a family graph.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: FamilySpec,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Re-check an embedding manifest or index certificate.
    Verify {
        /// Manifest file, or '-' for stdin.
        manifest: String,
        /// Search every exhausted k again.
        #[arg(long)]
        recheck: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Eccentricity and solver throughput.
    Bench {
        /// Order of the path whose 3-ASC host is profiled.
        #[arg(long, default_value_t = 10_000)]
        path_order: usize,
        /// Extra families to profile.
        #[arg(long, value_parser = parse_family)]
        family: Vec<FamilySpec>,
        /// Minimum seconds per solver measurement.
        #[arg(long, default_value_t = 1.0)]
        min_time: f64,
    },
}

fn parse_family(s: &str) -> Result<FamilySpec, String> {
    s.parse().map_err(|e: asc_core::Error| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: asc_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        asc_core::par::configure_threads(t.max(1));
    }
    match commands::run(cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            ExitCode::from(report.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
