use std::io::{Read, Write};
use std::time::Instant;

use colorcode::cluster::{self, ClusterSolution, EditSet};
use colorcode::coloring::{verify_family, write_family, FamilyParams};
use colorcode::cover::{self, CoverWitness};
use colorcode::cut::{self, CutWitness};
use colorcode::graph::{build_pattern, exact_tree_decomposition, parse_graph, PatternSpec};
use colorcode::oracle::{self, ClusterProfile, EditOutcome};
use colorcode::{embed, packing, Engine, Exec, Graph, SolveOptions, SolveStats, Solved, Vertex};
use serde_json::json;

use crate::output::{Outcome, Witness};
use crate::{packspec, CliError, Command, EngineArg, FamilyShape, Global, EXIT_NO, EXIT_YES};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub(crate) fn read_input(global: &Global, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    let path = global.input.as_deref().ok_or_else(|| usage("missing --input (use `-` for standard input)"))?;
    let text = if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?
    };
    Ok(parse_graph(&text)?)
}

pub(crate) fn options(global: &Global) -> SolveOptions {
    let engine = match global.engine {
        EngineArg::Exhaustive => Engine::Exhaustive,
        _ => Engine::ColorCode,
    };
    SolveOptions { engine, exec: Exec::Parallel, multiplier: global.multiplier }
}

/// A 1-based vertex from the command line, as a 0-based index.
fn vertex(g: &Graph, v: usize, name: &str) -> Result<Vertex, CliError> {
    if v == 0 || v > g.vertex_count() {
        return Err(usage(format!("--{name} {v} is not a vertex (expected 1..={})", g.vertex_count())));
    }
    Ok(v - 1)
}

/// Decision, witness and statistics of one solver call.
type Answer = (bool, Option<Witness>, SolveStats);

fn from_solved<T>(s: Solved<T>, f: impl FnOnce(T) -> Witness) -> Answer {
    (s.witness.is_some(), s.witness.map(f), s.stats)
}

fn from_oracle<T>(w: Option<T>, f: impl FnOnce(T) -> Witness) -> Answer {
    (w.is_some(), w.map(f), SolveStats::default())
}

fn cover_witness(w: CoverWitness) -> Witness {
    Witness::Cover { vertices: w.vertices, covered: w.covered }
}

fn oracle_cover(g: &Graph, vertices: Vec<Vertex>) -> Witness {
    let covered = g.edges().iter().copied().filter(|(u, v)| vertices.contains(u) || vertices.contains(v)).collect();
    Witness::Cover { vertices, covered }
}

fn clusters_witness(s: ClusterSolution) -> Witness {
    Witness::Clusters { additions: s.edits.additions, deletions: s.edits.deletions, clusters: s.clusters }
}

fn oracle_clusters(o: EditOutcome) -> Witness {
    Witness::Clusters { additions: o.additions, deletions: o.deletions, clusters: o.clusters }
}

fn edits_witness(e: EditSet) -> Witness {
    Witness::Edits { additions: e.additions, deletions: e.deletions }
}

fn cut_witness(w: CutWitness) -> Witness {
    Witness::Cut { x: w.x, s: w.s, y: w.y }
}

/// Packing through the oracle: one copy of every pattern component, with
/// each copy listed in the component's vertex order.
fn oracle_pack(g: &Graph, spec: &PatternSpec) -> Result<Option<Vec<Vec<Vertex>>>, CliError> {
    let pattern = build_pattern(spec)?;
    let parts: Vec<(Graph, Vec<Vertex>)> = pattern.components.iter().map(|c| pattern.graph.induced(c)).collect();
    let graphs: Vec<Graph> = parts.iter().map(|(h, _)| h.clone()).collect();
    let found = oracle::pack(g, &graphs)?;
    Ok(found.map(|copies| {
        pattern
            .components
            .iter()
            .zip(parts.iter().zip(copies))
            .map(|(comp, ((_, map), image))| {
                comp.iter().map(|h| image[map.iter().position(|x| x == h).expect("component vertex")]).collect()
            })
            .collect()
    }))
}

pub(crate) fn solve(command: &Command, global: &Global, g: &Graph) -> Result<Outcome, CliError> {
    let opts = options(global);
    let use_oracle = global.engine == EngineArg::Oracle;
    let start = Instant::now();
    let (mut outcome, answer) = match command {
        Command::Emb { pattern, anchors } => {
            let text = std::fs::read_to_string(pattern).map_err(|e| usage(format!("cannot read {pattern}: {e}")))?;
            let h = parse_graph(&text)?;
            let mut pairs = Vec::new();
            for a in anchors {
                let (hv, gv) = a.split_once('=').ok_or_else(|| usage(format!("anchor `{a}` is not h=v")))?;
                let hv: usize = hv.trim().parse().map_err(|_| usage(format!("bad anchor `{a}`")))?;
                let gv: usize = gv.trim().parse().map_err(|_| usage(format!("bad anchor `{a}`")))?;
                if hv == 0 || hv > h.vertex_count() {
                    return Err(usage(format!("anchor `{a}` names no pattern vertex")));
                }
                pairs.push((hv - 1, vertex(g, gv, "anchor")?));
            }
            let params = json!({ "pattern": pattern, "anchors": anchors });
            let answer = if use_oracle {
                from_oracle(oracle::embed(&h, g, &pairs)?, Witness::Assignment)
            } else {
                let td = exact_tree_decomposition(&h)?;
                from_solved(embed::embed(&h, &td, g, &pairs, &opts)?, |e| Witness::Assignment(e.assignment))
            };
            (Outcome::new("emb", params), answer)
        }
        Command::Matching { k } => {
            let answer = if use_oracle {
                from_oracle(oracle::matching(g, *k)?, Witness::Edges)
            } else {
                from_solved(embed::matching(g, *k, &opts)?, Witness::Edges)
            };
            (Outcome::new("matching", json!({ "k": k })), answer)
        }
        Command::Path { k } => {
            let answer = if use_oracle {
                from_oracle(oracle::k_path(g, *k)?, Witness::Path)
            } else {
                from_solved(embed::k_path(g, *k, &opts)?, Witness::Path)
            };
            (Outcome::new("path", json!({ "k": k })), answer)
        }
        Command::Distance { s, t, d } => {
            let (sv, tv) = (vertex(g, *s, "s")?, vertex(g, *t, "t")?);
            let answer = if use_oracle {
                from_oracle(oracle::distance(g, sv, tv, *d)?, Witness::Path)
            } else {
                from_solved(embed::distance(g, sv, tv, *d, &opts)?, Witness::Path)
            };
            (Outcome::new("distance", json!({ "s": s, "t": t, "d": d })), answer)
        }
        Command::Pack { pattern } => {
            let spec = packspec::parse(pattern)?;
            let answer = if use_oracle {
                from_oracle(oracle_pack(g, &spec)?, Witness::Copies)
            } else {
                from_solved(packing::pack_spec(g, &spec, &opts)?, |p| Witness::Copies(p.copies))
            };
            (Outcome::new("pack", json!({ "pattern": pattern })), answer)
        }
        Command::CyclePack { k, l } => {
            let answer = if use_oracle {
                if *l < 3 {
                    return Err(usage("cycles need l >= 3"));
                }
                from_oracle(oracle_pack(g, &PatternSpec::Cycles { k: *k, l: *l })?, Witness::Copies)
            } else {
                from_solved(packing::pack_cycles(g, *k, *l, &opts)?, |p| Witness::Copies(p.copies))
            };
            (Outcome::new("cycle-pack", json!({ "k": k, "l": l })), answer)
        }
        Command::Vc { k } => {
            let answer = if use_oracle {
                from_oracle(oracle::vertex_cover(g, *k)?, |v| oracle_cover(g, v))
            } else {
                from_solved(cover::vertex_cover(g, *k)?, cover_witness)
            };
            (Outcome::new("vc", json!({ "k": k })), answer)
        }
        Command::Pvc { k, t } => {
            let answer = if use_oracle {
                from_oracle(oracle::partial_vertex_cover(g, *k, *t)?, |v| oracle_cover(g, v))
            } else {
                from_solved(cover::partial_vertex_cover(g, *k, *t, &opts)?, cover_witness)
            };
            (Outcome::new("pvc", json!({ "k": k, "t": t })), answer)
        }
        Command::Epvc { t } => {
            let answer = if use_oracle {
                from_oracle(oracle::exact_partial_vertex_cover(g, *t)?, |v| oracle_cover(g, v))
            } else {
                from_solved(cover::exact_partial_vertex_cover(g, *t, &opts)?, cover_witness)
            };
            (Outcome::new("epvc", json!({ "t": t })), answer)
        }
        Command::Cluster { k, l } => {
            let answer = if use_oracle {
                from_oracle(ClusterProfile::new(g, *k)?.cliques(Some(*l), *k), oracle_clusters)
            } else {
                from_solved(cluster::cluster_editing(g, *k, *l, &opts)?, clusters_witness)
            };
            (Outcome::new("cluster", json!({ "k": k, "l": l })), answer)
        }
        Command::ManyCluster { k } => {
            let answer = if use_oracle {
                from_oracle(ClusterProfile::new(g, *k)?.cliques(None, *k), oracle_clusters)
            } else {
                from_solved(cluster::many_cluster_editing(g, *k, &opts)?, clusters_witness)
            };
            (Outcome::new("many-cluster", json!({ "k": k })), answer)
        }
        Command::ClusterFreel { k, l } => {
            let answer = if use_oracle {
                from_oracle(ClusterProfile::new(g, *k)?.cliques(Some(*l), *k), oracle_clusters)
            } else {
                from_solved(cluster::cluster_editing_free_l(g, *k, *l, &opts)?, clusters_witness)
            };
            (Outcome::new("cluster-freel", json!({ "k": k, "l": l })), answer)
        }
        Command::Ppartite { k, p, p_param } => {
            let answer = if use_oracle {
                from_oracle(ClusterProfile::new(g, *k)?.p_partite(*p, *k), |o| Witness::Edits {
                    additions: o.additions,
                    deletions: o.deletions,
                })
            } else {
                from_solved(cluster::p_partite_editing(g, *k, *p, *p_param, &opts)?, edits_witness)
            };
            (Outcome::new("ppartite", json!({ "k": k, "p": p, "p_param": p_param })), answer)
        }
        Command::Multipartite { k, parts } => {
            let answer = if use_oracle {
                from_oracle(ClusterProfile::new(g, *k)?.multipartite(parts, *k), oracle_clusters)
            } else {
                from_solved(cluster::multipartite_cluster_editing(g, *k, parts, &opts)?, clusters_witness)
            };
            (Outcome::new("multipartite", json!({ "k": k, "parts": parts })), answer)
        }
        Command::Cut { k, l, terminal } | Command::CutAtmost { k, l, terminal } => {
            let connected = matches!(command, Command::Cut { .. });
            let term = terminal.map(|t| vertex(g, t, "terminal")).transpose()?;
            let answer = if use_oracle {
                if !connected && *l < 2 {
                    return Err(usage("l must be at least 2"));
                }
                from_oracle(oracle::cut(g, *k, *l, term, connected)?, |(x, s, y)| Witness::Cut { x, s, y })
            } else if connected {
                from_solved(cut::cut_connected(g, *k, *l, term, &opts)?, cut_witness)
            } else {
                from_solved(cut::cut_at_most(g, *k, *l, term, &opts)?, cut_witness)
            };
            let name = if connected { "cut" } else { "cut-atmost" };
            (Outcome::new(name, json!({ "k": k, "l": l, "terminal": terminal })), answer)
        }
        Command::Family { .. } | Command::VerifyFamily { .. } | Command::Bench(_) => {
            unreachable!("handled before dispatch")
        }
    };
    let (found, witness, stats) = answer;
    outcome.answer = found;
    outcome.witness = witness;
    outcome.stats = stats;
    outcome.millis = start.elapsed().as_secs_f64() * 1000.0;
    Ok(outcome)
}

/// The `family` and `verify-family` subcommands.
pub(crate) fn family(
    shape: &FamilyShape,
    verify: bool,
    multiplier: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let params = FamilyParams::new(shape.n, shape.k, shape.c, multiplier)?;
    if !verify {
        write_family(&params, out)?;
        return Ok(EXIT_YES);
    }
    let report = verify_family(&params)?;
    let count = params.family_size();
    let _ = if report.covered {
        writeln!(out, "covered count={count} distinct={}", report.members_checked)
    } else {
        let (subset, colors) = report.counterexample.unwrap_or_default();
        writeln!(
            out,
            "not covered count={count} distinct={} subset={subset:?} colors={colors:?}",
            report.members_checked
        )
    };
    Ok(if report.covered { EXIT_YES } else { EXIT_NO })
}
