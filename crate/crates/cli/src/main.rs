//! `harris`: check, enumerate, generate and transform Harris graphs.

mod check;
mod enumerate;
mod family;
mod failure;
mod transform;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use failure::Failure;

#[derive(Parser)]
#[command(name = "harris", version, about = "Tough, Eulerian, non-Hamiltonian graphs")]
#[command(after_help = "Exit codes: 0 success, 1 usage, 2 parse or validation error, 3 ceiling exceeded.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report Eulerian, toughness, Hamiltonicity and Harris status for each
    /// graph6 line.
    Check(CheckArgs),
    /// Enumerate every Harris graph of one order.
    Enumerate(EnumerateArgs),
    /// Generate members of the Hirotaka, Shaw or Justine family.
    Family(FamilyArgs),
    /// Apply a graph transform.
    #[command(subcommand)]
    Transform(TransformCmd),
}

#[derive(Args)]
struct CheckArgs {
    /// graph6 file, one graph per line; stdin when absent or `-`.
    input: Option<PathBuf>,
    /// Print only graphs that are Harris (error records are still printed).
    #[arg(long)]
    harris_only: bool,
    /// Stop at the first malformed line.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Order of the graphs.
    n: usize,
    /// Directory for harris-<n>.g6, harris-<n>.json and counts.csv.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, env = "HARRIS_THREADS")]
    threads: Option<usize>,
    /// Checkpoint file, written as units finish and resumed from if present.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Stop once this many work units are done (checkpoint needed to resume).
    #[arg(long, requires = "checkpoint")]
    stop_after_units: Option<usize>,
    /// Allow orders 11 and 12, which take days or more.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// hirotaka, shaw or justine.
    name: String,
    /// Number of steps after the base graph.
    #[arg(long, default_value_t = 0)]
    steps: usize,
    /// Justine cycle length (odd, at least 3); emits that single graph.
    #[arg(long)]
    n: Option<usize>,
    /// Run the full Harris check on every emitted graph.
    #[arg(long)]
    verify: bool,
    /// Emit one JSON object per graph instead of bare graph6 lines.
    #[arg(long)]
    json: bool,
    /// Also write <family>.g6 and one <family>-<step>.json role map per graph.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TransformCmd {
    /// Join two graphs through W5 subdivisions of one edge each.
    Graft {
        /// First graph (graph6, or `-` for a line of stdin).
        g: String,
        /// Second graph (graph6).
        h: String,
        /// Edge of the first graph, `u,v`; defaults to its lowest edge.
        #[arg(long)]
        edge_g: Option<String>,
        /// Edge of the second graph, `u,v`; defaults to its lowest edge.
        #[arg(long)]
        edge_h: Option<String>,
        #[arg(long)]
        verify: bool,
    },
    /// Add 2-barnacles along shortest paths until every degree is even.
    Flower {
        g: String,
        #[arg(long)]
        verify: bool,
    },
    /// Shrink barnacles to length 2 (all of them unless --barnacle is set).
    Simplify {
        g: String,
        /// Index into the barnacle list, ordered by smallest internal vertex.
        #[arg(long)]
        barnacle: Option<usize>,
        #[arg(long)]
        verify: bool,
    },
    /// Lengthen one barnacle.
    Grow {
        g: String,
        /// Index into the barnacle list, ordered by smallest internal vertex.
        #[arg(long, default_value_t = 0)]
        barnacle: usize,
        /// Number of vertices to add.
        #[arg(long, default_value_t = 1)]
        by: usize,
        #[arg(long)]
        verify: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(failure::USAGE);
        }
    };
    let result = match cli.command {
        Command::Check(a) => check::run(&a),
        Command::Enumerate(a) => enumerate::run(&a),
        Command::Family(a) => family::run(&a),
        Command::Transform(t) => transform::run(&t),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            if !message.is_empty() {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}
