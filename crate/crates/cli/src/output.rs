use std::io::Write;

use colorcode::{SolveStats, Vertex};
use serde_json::{json, Map, Number, Value};

use crate::Global;

/// Everything a solved instance reports. Vertices are 0-based here and
/// printed 1-based.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub problem: &'static str,
    pub params: Map<String, Value>,
    pub answer: bool,
    pub witness: Option<Witness>,
    pub stats: SolveStats,
    pub threads: usize,
    pub millis: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Assignment(Vec<Vertex>),
    Path(Vec<Vertex>),
    Edges(Vec<(Vertex, Vertex)>),
    Copies(Vec<Vec<Vertex>>),
    Cover { vertices: Vec<Vertex>, covered: Vec<(Vertex, Vertex)> },
    Clusters { additions: Vec<(Vertex, Vertex)>, deletions: Vec<(Vertex, Vertex)>, clusters: Vec<Vec<Vertex>> },
    Edits { additions: Vec<(Vertex, Vertex)>, deletions: Vec<(Vertex, Vertex)> },
    Cut { x: Vec<Vertex>, s: Vec<Vertex>, y: Vec<Vertex> },
}

fn one(v: &[Vertex]) -> Vec<usize> {
    v.iter().map(|&x| x + 1).collect()
}

fn pairs(e: &[(Vertex, Vertex)]) -> Vec<[usize; 2]> {
    e.iter().map(|&(u, v)| [u + 1, v + 1]).collect()
}

fn lists(c: &[Vec<Vertex>]) -> Vec<Vec<usize>> {
    c.iter().map(|v| one(v)).collect()
}

fn words(v: &[Vertex]) -> String {
    one(v).iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn pair_words(e: &[(Vertex, Vertex)]) -> String {
    e.iter().map(|&(u, v)| format!("{}-{}", u + 1, v + 1)).collect::<Vec<_>>().join(" ")
}

impl Witness {
    pub fn to_json(&self) -> Value {
        match self {
            Witness::Assignment(a) => json!({ "assignment": one(a) }),
            Witness::Path(p) => json!({ "path": one(p) }),
            Witness::Edges(e) => json!({ "edges": pairs(e) }),
            Witness::Copies(c) => json!({ "copies": lists(c) }),
            Witness::Cover { vertices, covered } => json!({ "vertices": one(vertices), "covered": pairs(covered) }),
            Witness::Clusters { additions, deletions, clusters } => json!({
                "additions": pairs(additions),
                "deletions": pairs(deletions),
                "clusters": lists(clusters),
            }),
            Witness::Edits { additions, deletions } => {
                json!({ "additions": pairs(additions), "deletions": pairs(deletions) })
            }
            Witness::Cut { x, s, y } => json!({ "x": one(x), "s": one(s), "y": one(y) }),
        }
    }

    fn lines(&self) -> Vec<String> {
        match self {
            Witness::Assignment(a) => a.iter().enumerate().map(|(h, v)| format!("{} -> {}", h + 1, v + 1)).collect(),
            Witness::Path(p) => vec![format!("path: {}", words(p))],
            Witness::Edges(e) => vec![format!("edges: {}", pair_words(e))],
            Witness::Copies(c) => c.iter().enumerate().map(|(i, v)| format!("copy {}: {}", i + 1, words(v))).collect(),
            Witness::Cover { vertices, covered } => {
                vec![format!("vertices: {}", words(vertices)), format!("covered: {} edges", covered.len())]
            }
            Witness::Clusters { additions, deletions, clusters } => {
                let mut out =
                    vec![format!("add: {}", pair_words(additions)), format!("delete: {}", pair_words(deletions))];
                out.extend(clusters.iter().map(|c| format!("cluster: {}", words(c))));
                out
            }
            Witness::Edits { additions, deletions } => {
                vec![format!("add: {}", pair_words(additions)), format!("delete: {}", pair_words(deletions))]
            }
            Witness::Cut { x, s, y } => {
                vec![format!("X: {}", words(x)), format!("S: {}", words(s)), format!("Y: {}", words(y))]
            }
        }
    }
}

/// A non-negative integer of any size as a JSON number.
pub fn big(n: &impl ToString) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal digits form a JSON number"))
}

impl Outcome {
    pub fn new(problem: &'static str, params: Value) -> Self {
        let Value::Object(params) = params else { panic!("params must be an object") };
        Outcome { problem, params, answer: false, witness: None, stats: SolveStats::default(), threads: 1, millis: 0.0 }
    }

    pub fn to_json(&self, reproducible: bool) -> Value {
        let (threads, millis) = if reproducible { (0, 0.0) } else { (self.threads, self.millis) };
        json!({
            "problem": self.problem,
            "params": self.params,
            "answer": self.answer,
            "witness": self.witness.as_ref().map(Witness::to_json),
            "stats": {
                "family_size": big(&self.stats.family_size),
                "colorings_checked": big(&self.stats.colorings_checked),
                "threads": threads,
                "millis": millis,
            },
        })
    }

    pub fn write(&self, out: &mut dyn Write, global: &Global) {
        let _ = if global.json {
            writeln!(out, "{}", self.to_json(global.reproducible))
        } else {
            self.write_human(out, global)
        };
    }

    fn write_human(&self, out: &mut dyn Write, global: &Global) -> std::io::Result<()> {
        writeln!(out, "{}: {}", self.problem, if self.answer { "yes" } else { "no" })?;
        if global.witness {
            if let Some(w) = &self.witness {
                for line in w.lines() {
                    writeln!(out, "  {line}")?;
                }
            }
        }
        let millis = if global.reproducible { 0.0 } else { self.millis };
        writeln!(
            out,
            "family_size={} colorings_checked={} millis={millis:.3}",
            self.stats.family_size, self.stats.colorings_checked
        )
    }
}
