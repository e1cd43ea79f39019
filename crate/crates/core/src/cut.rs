//! Cutting a small vertex set off the rest of the graph.
//!
//! Colorings paint the separated side blue and the separator orange. Under
//! a suitable member the separated side is a union of blue components whose
//! outer neighbors are all orange, so it suffices to inspect blue
//! components and their boundaries.

use crate::error::{domain, Result};
use crate::graph::{Graph, Vertex};
use crate::runner::{no_work, search_members, Schedule, SolveOptions, Solved};

const BLUE: u8 = 1;

/// A partition `(X, S, Y)` of the vertices with no edge between `X` and
/// `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub x: Vec<Vertex>,
    pub s: Vec<Vertex>,
    pub y: Vec<Vertex>,
}

impl CutWitness {
    /// `X` together with `S = N(X)` and everything else as `Y`.
    fn around(g: &Graph, mut x: Vec<Vertex>) -> Self {
        x.sort_unstable();
        let s = boundary(g, &x);
        let y = (0..g.vertex_count()).filter(|v| x.binary_search(v).is_err() && s.binary_search(v).is_err()).collect();
        CutWitness { x, s, y }
    }
}

/// Vertices outside `set` with a neighbor in `set`, sorted.
fn boundary(g: &Graph, set: &[Vertex]) -> Vec<Vertex> {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    let mut out: Vec<Vertex> = set.iter().flat_map(|&v| g.undirected_neighbors(v)).filter(|&w| !inside[w]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Blue components of a coloring, each sorted, ordered by smallest vertex.
/// `of[v]` is the component index of blue vertex `v`.
fn blue_components(g: &Graph, col: &[u8]) -> (Vec<Vec<Vertex>>, Vec<usize>) {
    let n = g.vertex_count();
    let mut of = vec![usize::MAX; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if col[s] != BLUE || of[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        of[s] = id;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for w in g.undirected_neighbors(u) {
                if col[w] == BLUE && of[w] == usize::MAX {
                    of[w] = id;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    (comps, of)
}

fn check_terminal(g: &Graph, terminal: Option<Vertex>) -> Result<()> {
    match terminal {
        Some(t) if t >= g.vertex_count() => Err(domain(format!("terminal {} is not a vertex", t + 1))),
        _ => Ok(()),
    }
}

/// A connected `X` with exactly `l` vertices and `|N(X)| <= k`, containing
/// `terminal` when given.
pub fn cut_connected(
    g: &Graph,
    k: usize,
    l: usize,
    terminal: Option<Vertex>,
    opts: &SolveOptions,
) -> Result<Solved<CutWitness>> {
    if l == 0 {
        return Err(domain("l must be at least 1"));
    }
    check_terminal(g, terminal)?;
    let n = g.vertex_count();
    if l > n {
        return Ok(Solved::none(no_work()));
    }
    let mut schedule = Schedule::new(opts.engine, n, k + l, 2, opts.multiplier)?;
    let (hit, stats) = search_members(&mut schedule, opts.exec, |col| {
        let starts: Vec<Vertex> = match terminal {
            Some(t) => vec![t],
            None => (0..n).collect(),
        };
        starts.into_iter().filter(|&x| col[x] == BLUE).find_map(|x| {
            let comp = bounded_blue_component(g, col, x, l)?;
            (comp.len() == l && boundary(g, &comp).len() <= k).then_some(comp)
        })
    });
    Ok(Solved { witness: hit.map(|h| CutWitness::around(g, h.value)), stats })
}

/// The blue component of `x`, or `None` once it exceeds `cap` vertices.
fn bounded_blue_component(g: &Graph, col: &[u8], x: Vertex, cap: usize) -> Option<Vec<Vertex>> {
    let mut comp = vec![x];
    let mut i = 0;
    while i < comp.len() {
        let u = comp[i];
        i += 1;
        for w in g.undirected_neighbors(u) {
            if col[w] == BLUE && !comp.contains(&w) {
                if comp.len() == cap {
                    return None;
                }
                comp.push(w);
            }
        }
    }
    comp.sort_unstable();
    Some(comp)
}

/// An `X` (not necessarily connected) with `1 < |X| <= l` and
/// `|N(X)| <= k`, containing `terminal` when given.
///
/// If some connected part of a valid `X` has two or more vertices, that
/// part alone is valid. Otherwise every part is a singleton and any two of
/// them are valid. With a terminal whose part is a singleton, the terminal
/// plus any one other part is valid. The per-coloring check covers exactly
/// these shapes.
pub fn cut_at_most(
    g: &Graph,
    k: usize,
    l: usize,
    terminal: Option<Vertex>,
    opts: &SolveOptions,
) -> Result<Solved<CutWitness>> {
    if l < 2 {
        return Err(domain("l must be at least 2"));
    }
    check_terminal(g, terminal)?;
    let n = g.vertex_count();
    if n < 2 {
        return Ok(Solved::none(no_work()));
    }
    let mut schedule = Schedule::new(opts.engine, n, k + l, 2, opts.multiplier)?;
    let (hit, stats) = search_members(&mut schedule, opts.exec, |col| {
        let (comps, of) = blue_components(g, col);
        match terminal {
            Some(t) => with_terminal(g, &comps, &of, t, k, l),
            None => without_terminal(g, &comps, k, l),
        }
    });
    Ok(Solved { witness: hit.map(|h| CutWitness::around(g, h.value)), stats })
}

fn without_terminal(g: &Graph, comps: &[Vec<Vertex>], k: usize, l: usize) -> Option<Vec<Vertex>> {
    if let Some(c) = comps.iter().find(|c| (2..=l).contains(&c.len()) && boundary(g, c).len() <= k) {
        return Some(c.clone());
    }
    let singles: Vec<Vertex> = comps.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
    for (i, &u) in singles.iter().enumerate() {
        for &v in &singles[i + 1..] {
            if boundary(g, &[u, v]).len() <= k {
                return Some(vec![u, v]);
            }
        }
    }
    None
}

fn with_terminal(g: &Graph, comps: &[Vec<Vertex>], of: &[usize], t: Vertex, k: usize, l: usize) -> Option<Vec<Vertex>> {
    if of[t] == usize::MAX {
        return None;
    }
    let own = &comps[of[t]];
    if own.len() >= 2 {
        return (own.len() <= l && boundary(g, own).len() <= k).then(|| own.clone());
    }
    comps.iter().filter(|c| c[0] != t && c.len() < l).find_map(|c| {
        let mut x = c.clone();
        x.push(t);
        (boundary(g, &x).len() <= k).then_some(x)
    })
}
