//! The `pack` pattern mini-language.
//!
//! ```text
//! kK2:3            three disjoint edges
//! kK3:2            two disjoint triangles
//! kK4:2 kP3:2 kC4:2  copies of a clique, path or cycle (at most 5 vertices)
//! cycle:k=2,l=4    two disjoint 4-cycles
//! path:k=1,l=5     one path on 5 vertices
//! forest:@file     an explicit forest
//! graphs:@a,@b     one copy of each listed graph
//! ```

use colorcode::graph::{parse_graph, PatternSpec};
use colorcode::Graph;

use crate::CliError;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read(path: &str) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    Ok(parse_graph(&text)?)
}

fn number(s: &str, what: &str) -> Result<usize, CliError> {
    s.trim().parse().map_err(|_| usage(format!("expected a number for {what}, got `{s}`")))
}

/// Reads `k=..,l=..` into `(k, l)`.
fn k_and_l(rest: &str) -> Result<(usize, usize), CliError> {
    let (mut k, mut l) = (None, None);
    for item in rest.split(',') {
        match item.split_once('=') {
            Some(("k", v)) => k = Some(number(v, "k")?),
            Some(("l", v)) => l = Some(number(v, "l")?),
            _ => return Err(usage(format!("unexpected `{item}` in pattern"))),
        }
    }
    Ok((k.ok_or_else(|| usage("pattern needs k="))?, l.ok_or_else(|| usage("pattern needs l="))?))
}

pub fn parse(text: &str) -> Result<PatternSpec, CliError> {
    let (head, rest) = text.split_once(':').ok_or_else(|| usage(format!("malformed pattern `{text}`")))?;
    match head {
        "cycle" => {
            let (k, l) = k_and_l(rest)?;
            Ok(PatternSpec::Cycles { k, l })
        }
        "path" => {
            let (k, l) = k_and_l(rest)?;
            Ok(PatternSpec::Paths { k, l })
        }
        "forest" => {
            let path = rest.strip_prefix('@').ok_or_else(|| usage("forest pattern needs @file"))?;
            Ok(PatternSpec::Forest(read(path)?))
        }
        "graphs" => {
            let graphs = rest
                .split(',')
                .map(|p| p.strip_prefix('@').ok_or_else(|| usage("graphs pattern needs @file entries")).and_then(read))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PatternSpec::Multiset(graphs))
        }
        _ => {
            let shape = head.strip_prefix('k').ok_or_else(|| usage(format!("unknown pattern `{head}`")))?;
            let k = number(rest, "copy count")?;
            let (kind, size) = shape.split_at(1.min(shape.len()));
            let size = number(size, "pattern size")?;
            let base = match kind {
                "K" if size == 2 => return Ok(PatternSpec::Matching { k }),
                "K" if size == 3 => return Ok(PatternSpec::Triangles { k }),
                "K" => Graph::complete(size),
                "P" => Graph::path(size),
                "C" => Graph::cycle(size),
                _ => return Err(usage(format!("unknown pattern `{head}`"))),
            };
            Ok(PatternSpec::Copies { k, base })
        }
    }
}
