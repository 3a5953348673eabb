//! `agraph`: discrete homotopy invariants of graphs from the command line.
//!
//! Exit codes: 0 ok, 10 distinct, 11 unknown, 1 error.

mod commands;
mod selfcheck;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use log::LevelFilter;

use commands::{CommandResult, Status};

#[derive(Parser, Debug)]
#[command(name = "agraph", version, about = "Discrete homotopy (A-theory) invariants of graphs")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Log progress to stderr (repeat for more detail).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartesian product of two graphs, written as a graph file.
    Product { left: PathBuf, right: PathBuf },

    /// Presentation and abelianization of A_1, or loop comparison.
    A1 {
        graph: PathBuf,
        /// Base vertex; defaults to the base stored in the graph file.
        #[arg(long)]
        base: Option<String>,
        /// Print the spanning-tree and simplified presentations.
        #[arg(long)]
        presentation: bool,
        /// Print the abelian invariants.
        #[arg(long)]
        abelianize: bool,
        /// A based loop as comma-separated vertices; give two to compare.
        #[arg(long = "loop", value_name = "WALK")]
        loops: Vec<String>,
        /// Skip the bounded grid search when the algebra is inconclusive.
        #[arg(long)]
        no_search: bool,
    },

    /// The graph Γ_q of a simplicial complex given as a facet list.
    #[command(name = "gamma-q")]
    GammaQ {
        facets: PathBuf,
        #[arg(short, long)]
        q: usize,
        /// `maximal` (facets only) or `all` (every face of dimension ≥ q).
        #[arg(long, default_value = "maximal")]
        mode: String,
        /// Base simplex as comma-separated vertex tokens; defaults to the
        /// first simplex in the output.
        #[arg(long, alias = "base", value_name = "TOKENS")]
        sigma0: Option<String>,
    },

    /// Nondegenerate cell counts of M_*(Γ) up to a dimension.
    Fvec {
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },

    /// The loop graph ΩG (or path graph PG) truncated at a walk length.
    #[command(name = "loop-graph")]
    LoopGraph {
        graph: PathBuf,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        max_len: usize,
        /// Keep every padding of a walk as its own vertex.
        #[arg(long)]
        no_collapse: bool,
        /// List connected components.
        #[arg(long)]
        components: bool,
        /// Build PG instead of ΩG.
        #[arg(long)]
        paths: bool,
    },

    /// Bounded search for a grid homotopy between two loops.
    Homotopy {
        graph: PathBuf,
        #[arg(long)]
        base: Option<String>,
        #[arg(long = "loop", value_name = "WALK", num_args = 1, required = true)]
        loops: Vec<String>,
        /// Box width `W`, or `WxH` to also cap the layers at `H - 1`.
        #[arg(long = "box", value_name = "WxH")]
        box_size: String,
        #[arg(long, default_value_t = 6)]
        max_layers: usize,
        /// Write f.json, g.json and h.json of a found certificate here.
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
    },

    /// Check a homotopy certificate given as three grid files.
    #[command(name = "verify-cert")]
    VerifyCert {
        f: PathBuf,
        g: PathBuf,
        h: PathBuf,
        /// Target graph; without it only the face and end-slice conditions are checked.
        #[arg(long)]
        graph: Option<PathBuf>,
    },

    /// Apply α to a grid of loops, producing a grid in the graph.
    Alpha {
        grid: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        base: Option<String>,
    },

    /// Randomized property checks of the library (test harness).
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}

fn run(cli: &Cli) -> CommandResult {
    let outcome = match &cli.command {
        Command::Product { left, right } => commands::product(left, right),
        Command::A1 { graph, base, presentation, abelianize, loops, no_search } => {
            commands::a1(graph, base.as_deref(), *presentation, *abelianize, loops, *no_search)
        }
        Command::GammaQ { facets, q, mode, sigma0 } => commands::gamma_q(facets, *q, mode, sigma0.as_deref()),
        Command::Fvec { graph, max_dim } => commands::fvec(graph, *max_dim),
        Command::LoopGraph { graph, base, max_len, no_collapse, components, paths } => {
            commands::loop_graph(graph, base.as_deref(), *max_len, !*no_collapse, *components, *paths)
        }
        Command::Homotopy { graph, base, loops, box_size, max_layers, out_dir } => {
            commands::homotopy(graph, base.as_deref(), loops, box_size, *max_layers, out_dir.as_deref())
        }
        Command::VerifyCert { f, g, h, graph } => commands::verify_cert(f, g, h, graph.as_deref()),
        Command::Alpha { grid, graph, base } => commands::alpha(grid, graph, base.as_deref()),
        Command::Selfcheck { seed, cases } => Ok(selfcheck::run(*seed, *cases)),
    };
    outcome.unwrap_or_else(CommandResult::error)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => LevelFilter::Warn,
        1 => LevelFilter::Info,
        _ => LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp(None).init();

    let result = run(&cli);
    // a closed pipe downstream is not worth a panic
    let mut out = io::stdout().lock();
    if result.status == Status::Error && !cli.json {
        eprintln!("error: {}", result.text);
    } else if cli.json && !result.raw {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&result.json_with_status()).expect("reports serialize"));
    } else {
        let _ = writeln!(out, "{}", result.text);
    }
    ExitCode::from(result.status.code())
}
