//! Command-line front end for the `colorcode` solvers.
//!
//! [`run`] is the whole program behind a testable signature: it takes the
//! argument vector and the three standard streams and returns the exit
//! status (0 yes, 1 no, 2 usage or input error, 3 guard violation).

mod bench;
mod output;
mod packspec;
mod solve;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use colorcode::Error;

pub use output::Outcome;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "colorcode", version, about = "Color-coding solvers for fixed-parameter graph problems")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Graph file, or `-` for standard input.
    #[arg(long, global = true)]
    pub input: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Colorcode)]
    pub engine: EngineArg,
    /// Worker threads (default: all available).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Print the JSON result document.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print the witness in human-readable output.
    #[arg(long, global = true)]
    pub witness: bool,
    /// Report zero for `threads` and `millis` so that output is
    /// byte-identical across runs and thread counts.
    #[arg(long, global = true)]
    pub reproducible: bool,
    /// Family length multiplier.
    #[arg(long, global = true, default_value_t = 1)]
    pub multiplier: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Colorcode,
    Exhaustive,
    Oracle,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Embed a pattern graph (read from --pattern) into the input graph.
    Emb {
        #[arg(long)]
        pattern: String,
        /// Anchor `h=v`: pattern vertex h must map to host vertex v.
        #[arg(long = "anchor")]
        anchors: Vec<String>,
    },
    /// k pairwise disjoint edges.
    Matching {
        #[arg(long)]
        k: usize,
    },
    /// A simple path on k vertices.
    Path {
        #[arg(long)]
        k: usize,
    },
    /// A path with at most d edges from s to t.
    Distance {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        d: usize,
    },
    /// Disjoint copies of a pattern: kK2:3, kK3:2, kC4:2, cycle:k=2,l=4,
    /// path:k=1,l=5, forest:@file, graphs:@a,@b.
    Pack {
        #[arg(long)]
        pattern: String,
    },
    /// k disjoint cycles of length l.
    CyclePack {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Vertex cover of size at most k.
    Vc {
        #[arg(long)]
        k: usize,
    },
    /// At most k vertices covering at least t edges.
    Pvc {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// A vertex set covering exactly t edges.
    Epvc {
        #[arg(long)]
        t: usize,
    },
    /// At most k edits into exactly l cliques.
    Cluster {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// At most k edits into any number of cliques.
    ManyCluster {
        #[arg(long)]
        k: usize,
    },
    /// At most k edits into exactly l cliques, l not a parameter.
    ClusterFreel {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// At most k edits into a complete p-partite graph.
    Ppartite {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
        /// Treat p as a parameter of the clique search.
        #[arg(long)]
        p_param: bool,
    },
    /// At most k edits into components that are complete p_i-partite.
    Multipartite {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
    /// A connected set of exactly l vertices with at most k neighbors.
    Cut {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        terminal: Option<usize>,
    },
    /// A set of 2..=l vertices with at most k neighbors.
    CutAtmost {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        terminal: Option<usize>,
    },
    /// Dump the (n, k, c) coloring family, or verify it with --verify.
    Family {
        #[command(flatten)]
        shape: FamilyShape,
        #[arg(long)]
        verify: bool,
    },
    /// Check that the (n, k, c) family is universal.
    VerifyFamily {
        #[command(flatten)]
        shape: FamilyShape,
    },
    /// Time a solver at several thread counts.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct FamilyShape {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub c: usize,
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Guard(_) => EXIT_GUARD,
        _ => EXIT_USAGE,
    }
}

/// Runs one invocation.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let threads = cli.global.threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if threads == 0 {
        let _ = writeln!(err, "error: --threads must be at least 1");
        return EXIT_USAGE;
    }
    let result = match &cli.command {
        Command::Family { shape, verify } => solve::family(shape, *verify, cli.global.multiplier, out),
        Command::VerifyFamily { shape } => solve::family(shape, true, cli.global.multiplier, out),
        Command::Bench(args) => bench::run(args, &cli.global, stdin, out),
        command => solve::read_input(&cli.global, stdin).and_then(|g| {
            pool(threads)?.install(|| solve::solve(command, &cli.global, &g)).map(|mut outcome| {
                outcome.threads = threads;
                outcome.write(out, &cli.global);
                if outcome.answer {
                    EXIT_YES
                } else {
                    EXIT_NO
                }
            })
        }),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Solver(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Solver(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Solver(e)
    }
}

pub(crate) fn pool(threads: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {threads} threads: {e}")))
}
