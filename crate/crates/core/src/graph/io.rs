//! Edge-list text format.
//!
//! ```text
//! # comment lines are allowed anywhere
//! <n> <m> [directed]
//! <u> <v>            (m lines, 1 <= u, v <= n, u != v)
//! labels             (optional trailing section)
//! <v> <label>
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{Graph, Vertex};
use crate::error::{Error, ParseErrorKind, Result};

fn err(line: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { line, kind }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(err(1, ParseErrorKind::Missing("header")))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let bad_header = || err(hline, ParseErrorKind::MalformedHeader(header.to_string()));
    let (n, m, directed) = match fields.as_slice() {
        [n, m] => (n, m, false),
        [n, m, "directed"] => (n, m, true),
        [n, m, "undirected"] => (n, m, false),
        _ => return Err(bad_header()),
    };
    let n: usize = n.parse().map_err(|_| bad_header())?;
    let m: usize = m.parse().map_err(|_| bad_header())?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    let mut label_lines = Vec::new();
    let mut in_labels = false;
    for (lineno, line) in lines {
        if in_labels {
            label_lines.push((lineno, line));
            continue;
        }
        if line == "labels" {
            in_labels = true;
            continue;
        }
        if edges.len() == m {
            return Err(err(lineno, ParseErrorKind::EdgeCount { declared: m, found: m + 1 }));
        }
        let (u, v) = parse_pair(line).ok_or_else(|| err(lineno, ParseErrorKind::MalformedEdge(line.to_string())))?;
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(err(lineno, ParseErrorKind::VertexOutOfRange { vertex: x, n }));
            }
        }
        if u == v {
            return Err(err(lineno, ParseErrorKind::SelfLoop(u)));
        }
        let key = if directed || u < v { (u, v) } else { (v, u) };
        if !seen.insert(key) {
            return Err(err(lineno, ParseErrorKind::DuplicateEdge(u, v)));
        }
        edges.push((key.0 - 1, key.1 - 1));
    }
    if edges.len() != m {
        let last = text.lines().count().max(1);
        return Err(err(last, ParseErrorKind::EdgeCount { declared: m, found: edges.len() }));
    }
    edges.sort_unstable();
    let mut g = Graph::from_sorted(n, directed, edges);
    for (lineno, line) in label_lines {
        let bad = || err(lineno, ParseErrorKind::MalformedLabel(line.to_string()));
        let (v, label) = line.split_once(char::is_whitespace).ok_or_else(bad)?;
        let v: Vertex = v.parse().map_err(|_| bad())?;
        let label = label.trim();
        if v == 0 || v > n {
            return Err(err(lineno, ParseErrorKind::VertexOutOfRange { vertex: v, n }));
        }
        if label.is_empty() || label.contains(char::is_whitespace) {
            return Err(bad());
        }
        g.set_label(v - 1, label);
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let u = it.next()?.parse().ok()?;
    let v = it.next()?.parse().ok()?;
    it.next().is_none().then_some((u, v))
}

/// Canonical text form: normalized whitespace, edges sorted
/// lexicographically, labels (if any) in a trailing section.
pub fn serialize_graph(g: &Graph) -> String {
    let mut s = String::new();
    let kind = if g.is_directed() { " directed" } else { "" };
    let _ = writeln!(s, "{} {}{}", g.vertex_count(), g.edge_count(), kind);
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{} {}", u + 1, v + 1);
    }
    if !g.labels().is_empty() {
        s.push_str("labels\n");
        for (v, l) in g.labels() {
            let _ = writeln!(s, "{} {}", v + 1, l);
        }
    }
    s
}
