//! `bench`: wall time of one solver at several thread counts.
//!
//! Output is one line per run,
//! `threads=<t> run=<r> millis=<ms> family_size=<n> colorings_checked=<n> answer=<yes|no>`,
//! or a JSON array of the same records with `--json`.

use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, ValueEnum};
use colorcode::{embed, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::output::big;
use crate::solve::{options, read_input};
use crate::{pool, CliError, Global, EXIT_YES};

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = BenchProblem::Matching)]
    pub problem: BenchProblem,
    #[arg(long)]
    pub k: usize,
    /// Thread counts to compare.
    #[arg(long, value_delimiter = ',', default_value = "1,4")]
    pub sweep: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub runs: usize,
    /// Use a random graph on this many vertices instead of --input.
    #[arg(long)]
    pub random_n: Option<usize>,
    /// Edge probability of the random graph.
    #[arg(long, default_value_t = 0.05)]
    pub density: f64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchProblem {
    Matching,
    Path,
}

/// `G(n, p)` from a seeded generator.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::undirected(n, &edges).expect("generated edges are valid")
}

pub(crate) fn run(
    args: &BenchArgs,
    global: &Global,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if !(0.0..=1.0).contains(&args.density) {
        return Err(CliError::Usage("--density must lie in [0, 1]".into()));
    }
    let g = match args.random_n {
        Some(n) => random_graph(n, args.density, args.seed),
        None => read_input(global, stdin)?,
    };
    let opts = options(global);
    let mut records = Vec::new();
    for &threads in &args.sweep {
        let pool = pool(threads)?;
        for r in 1..=args.runs {
            let start = Instant::now();
            let solved = pool.install(|| match args.problem {
                BenchProblem::Matching => embed::matching(&g, args.k, &opts).map(|s| (s.found(), s.stats)),
                BenchProblem::Path => embed::k_path(&g, args.k, &opts).map(|s| (s.found(), s.stats)),
            })?;
            let millis = start.elapsed().as_secs_f64() * 1000.0;
            let (found, stats) = solved;
            if global.json {
                records.push(json!({
                    "threads": threads,
                    "run": r,
                    "millis": millis,
                    "family_size": big(&stats.family_size),
                    "colorings_checked": big(&stats.colorings_checked),
                    "answer": found,
                }));
            } else {
                let _ = writeln!(
                    out,
                    "threads={threads} run={r} millis={millis:.3} family_size={} colorings_checked={} answer={}",
                    stats.family_size,
                    stats.colorings_checked,
                    if found { "yes" } else { "no" }
                );
            }
        }
    }
    if global.json {
        let _ = writeln!(out, "{}", Value::Array(records));
    }
    Ok(EXIT_YES)
}
