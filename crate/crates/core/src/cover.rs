//! Vertex cover, partial vertex cover and exact partial vertex cover.
//!
//! `vertex_cover` kernelizes with the high-degree rule and then searches the
//! bounded residual. The partial variants color edges with an
//! `(|E|, t, t)`-universal family: a set of vertices covering at least (or
//! exactly) `t` edges has some `t` of its covered edges colored with
//! distinct colors, and for a fixed coloring the question becomes a
//! dynamic program over color subsets.
//!
//! Within a hash block `(p, a)` the colorings differ only in how buckets are
//! mapped to colors, so the block as a whole succeeds exactly when enough
//! distinct buckets can be collected; the color-code engine evaluates one
//! block at a time.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::coloring::{threshold, FamilyParams, HashBlock};
use crate::error::{domain, Result};
use crate::graph::{Graph, Vertex};
use crate::runner::{no_work, search_blocks, search_members, Engine, Schedule, SolveOptions, Solved};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelVerdict {
    Kernelized,
    TooManyForced,
    ResidualTooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    /// Vertices of degree at least `k + 1`.
    pub forced: Vec<Vertex>,
    /// The graph left after removing forced vertices and then isolated ones.
    pub residual: Graph,
    /// `residual_map[i]` is the input vertex behind residual vertex `i`.
    pub residual_map: Vec<Vertex>,
    pub remaining_budget: usize,
    pub verdict: KernelVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverWitness {
    pub vertices: Vec<Vertex>,
    /// Edges with an endpoint in `vertices`, in edge-list order.
    pub covered: Vec<(Vertex, Vertex)>,
}

impl CoverWitness {
    fn new(g: &Graph, mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        let mut chosen = vec![false; g.vertex_count()];
        for &v in &vertices {
            chosen[v] = true;
        }
        let covered = g.edges().iter().copied().filter(|&(u, v)| chosen[u] || chosen[v]).collect();
        CoverWitness { vertices, covered }
    }
}

pub fn buss_kernel(g: &Graph, k: usize) -> Result<Kernel> {
    let n = g.vertex_count();
    let high: Vec<bool> = (0..n).map(|v| g.degree(v) > k).collect();
    let forced: Vec<Vertex> = (0..n).filter(|&v| high[v]).collect();
    if !forced.is_empty() && threshold(&high, k + 1)? {
        return Ok(Kernel {
            forced,
            residual: Graph::empty(0),
            residual_map: Vec::new(),
            remaining_budget: 0,
            verdict: KernelVerdict::TooManyForced,
        });
    }
    let keep: Vec<Vertex> =
        (0..n).filter(|&v| !high[v] && g.undirected_neighbors(v).iter().any(|&w| !high[w])).collect();
    let (residual, residual_map) = g.induced(&keep);
    let verdict =
        if residual.vertex_count() > k * (k + 1) { KernelVerdict::ResidualTooLarge } else { KernelVerdict::Kernelized };
    Ok(Kernel { remaining_budget: k - forced.len(), forced, residual, residual_map, verdict })
}

/// A cover of all edges with at most `k` vertices.
pub fn vertex_cover(g: &Graph, k: usize) -> Result<Solved<CoverWitness>> {
    let kernel = buss_kernel(g, k)?;
    if kernel.verdict != KernelVerdict::Kernelized {
        return Ok(Solved::none(no_work()));
    }
    let r = &kernel.residual;
    let found = (0..=kernel.remaining_budget.min(r.vertex_count())).find_map(|size| {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mut chosen = vec![false; r.vertex_count()];
            for &v in &combo {
                chosen[v] = true;
            }
            if r.edges().iter().all(|&(u, v)| chosen[u] || chosen[v]) {
                return Some(combo);
            }
            if !next_combination(&mut combo, r.vertex_count()) {
                return None;
            }
        }
    });
    Ok(Solved {
        witness: found.map(|combo| {
            let mut s = kernel.forced.clone();
            s.extend(combo.iter().map(|&i| kernel.residual_map[i]));
            CoverWitness::new(g, s)
        }),
        stats: no_work(),
    })
}

/// Advances `combo` to the next `combo.len()`-subset of `0..n` in
/// lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn bit(i: usize) -> u128 {
    1u128 << i
}

/// Bucket (or color) sets of a block's edges, one bit per bucket.
fn edge_bits(g: &Graph, label: impl Fn(usize) -> usize) -> Vec<u128> {
    (0..g.edge_count()).map(|e| bit(label(e))).collect()
}

/// At most `k` vertices whose incident labels hit at least `need` distinct
/// labels; vertices ascending, fewest vertices first.
fn collect_labels(g: &Graph, edge_bits: &[u128], k: usize, need: u32) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut vmask = vec![0u128; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        vmask[u] |= edge_bits[e];
        vmask[v] |= edge_bits[e];
    }
    let mut parent: HashMap<u128, (u128, Vertex)> = HashMap::new();
    let mut frontier: BTreeSet<u128> = BTreeSet::from([0]);
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for &mask in &frontier {
            for (v, &m) in vmask.iter().enumerate() {
                let nm = mask | m;
                if nm == mask || nm == 0 || parent.contains_key(&nm) {
                    continue;
                }
                parent.insert(nm, (mask, v));
                if nm.count_ones() >= need {
                    return Some(unwind(&parent, nm));
                }
                next.insert(nm);
            }
        }
        frontier = next;
    }
    None
}

fn unwind(parent: &HashMap<u128, (u128, Vertex)>, mut mask: u128) -> Vec<Vertex> {
    let mut out = Vec::new();
    while mask != 0 {
        let (prev, v) = parent[&mask];
        out.push(v);
        mask = prev;
    }
    out
}

fn check_bits(label_count: usize) -> Result<()> {
    if label_count > 128 {
        return Err(domain("coverage target too large for the label bitsets (t^2 must be at most 128)"));
    }
    Ok(())
}

/// At most `k` vertices covering at least `t` edges.
pub fn partial_vertex_cover(g: &Graph, k: usize, t: usize, opts: &SolveOptions) -> Result<Solved<CoverWitness>> {
    if k == 0 || t == 0 {
        return Err(domain("partial vertex cover needs k >= 1 and t >= 1"));
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) >= t) {
        return Ok(Solved { witness: Some(CoverWitness::new(g, vec![v])), stats: no_work() });
    }
    let m = g.edge_count();
    if m < t {
        return Ok(Solved::none(no_work()));
    }
    let need = t as u32;
    let found = match opts.engine {
        Engine::ColorCode => {
            check_bits(t * t)?;
            let params = FamilyParams::new(m, t, t, opts.multiplier)?;
            let (hit, stats) = search_blocks(&params, opts.exec, |b: &HashBlock| {
                collect_labels(g, &edge_bits(g, |e| b.bucket(e + 1)), k, need)
            });
            Solved { witness: hit.map(|(_, s)| s), stats }
        }
        Engine::Exhaustive => {
            let mut schedule = Schedule::new(Engine::Exhaustive, m, t, t, opts.multiplier)?;
            let (hit, stats) = search_members(&mut schedule, opts.exec, |col| {
                collect_labels(g, &edge_bits(g, |e| col[e] as usize - 1), k, need)
            });
            Solved { witness: hit.map(|h| h.value), stats }
        }
    };
    Ok(found.map(|s| CoverWitness::new(g, s)))
}

/// The graph after degree splitting: every vertex of degree above `t`
/// becomes an isolated vertex labelled `red`, and each of its edges gets a
/// fresh `red` endpoint instead. `origin[i]` names the input vertex behind
/// split vertex `i`.
pub fn degree_split(g: &Graph, t: usize) -> Result<(Graph, Vec<Vertex>)> {
    let n = g.vertex_count();
    let high: Vec<bool> = (0..n).map(|v| g.degree(v) > t).collect();
    let mut origin: Vec<Vertex> = (0..n).collect();
    let mut edges = Vec::with_capacity(g.edge_count());
    let fresh = |v: Vertex, origin: &mut Vec<Vertex>| {
        if high[v] {
            origin.push(v);
            origin.len() - 1
        } else {
            v
        }
    };
    for &(u, v) in g.edges() {
        let a = fresh(u, &mut origin);
        let b = fresh(v, &mut origin);
        edges.push((a, b));
    }
    let mut split = Graph::new(origin.len(), g.is_directed(), edges)?;
    for (i, &o) in origin.iter().enumerate() {
        if high[o] {
            split.set_label(i, "red");
        }
    }
    Ok((split, origin))
}

/// A connected set of non-red vertices and the edges incident to it.
#[derive(Debug, Clone)]
struct Item {
    vertices: Vec<Vertex>,
    edges: Vec<usize>,
}

/// Connected sets of non-red vertices covering between 1 and `t` edges.
/// Every exact cover splits into such sets along the components it
/// induces, and distinct components share no covered edge.
fn items(g: &Graph, t: usize) -> Vec<Item> {
    let n = g.vertex_count();
    let usable: Vec<bool> = (0..n).map(|v| g.label(v) != Some("red") && g.degree(v) > 0).collect();
    let incident: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut es: Vec<usize> =
                g.undirected_neighbors(v).iter().filter_map(|&w| g.edge_index(v, w).or(g.edge_index(w, v))).collect();
            es.sort_unstable();
            es.dedup();
            es
        })
        .collect();
    let cover_of = |set: &[Vertex]| {
        let mut es: Vec<usize> = set.iter().flat_map(|&v| incident[v].iter().copied()).collect();
        es.sort_unstable();
        es.dedup();
        es
    };
    let mut seen: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    let mut stack: Vec<Vec<Vertex>> =
        (0..n).filter(|&v| usable[v] && incident[v].len() <= t).map(|v| vec![v]).collect();
    let mut out = Vec::new();
    while let Some(set) = stack.pop() {
        if !seen.insert(set.clone()) {
            continue;
        }
        let edges = cover_of(&set);
        for &v in &set {
            for w in g.undirected_neighbors(v) {
                if usable[w] && set.binary_search(&w).is_err() {
                    let mut bigger = set.clone();
                    bigger.insert(bigger.binary_search(&w).unwrap_err(), w);
                    if !seen.contains(&bigger) && cover_of(&bigger).len() <= t {
                        stack.push(bigger);
                    }
                }
            }
        }
        out.push(Item { vertices: set, edges });
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

/// Items with pairwise disjoint label sets whose labels total exactly
/// `t`. Items whose own edges repeat a label are unusable.
fn exact_labels(items: &[Item], label: impl Fn(usize) -> usize, t: u32) -> Option<Vec<usize>> {
    let masks: Vec<Option<u128>> = items
        .iter()
        .map(|it| {
            let m = it.edges.iter().fold(0u128, |m, &e| m | bit(label(e)));
            (m.count_ones() as usize == it.edges.len()).then_some(m)
        })
        .collect();
    let mut parent: BTreeMap<u128, (u128, usize)> = BTreeMap::new();
    let mut frontier = vec![0u128];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &mask in &frontier {
            for (i, m) in masks.iter().enumerate() {
                let Some(m) = *m else { continue };
                if mask & m != 0 {
                    continue;
                }
                let nm = mask | m;
                if nm.count_ones() > t || parent.contains_key(&nm) {
                    continue;
                }
                parent.insert(nm, (mask, i));
                if nm.count_ones() == t {
                    let mut chosen = Vec::new();
                    let mut cur = nm;
                    while cur != 0 {
                        let (prev, i) = parent[&cur];
                        chosen.push(i);
                        cur = prev;
                    }
                    return Some(chosen);
                }
                next.push(nm);
            }
        }
        frontier = next;
    }
    None
}

/// A vertex set covering exactly `t` edges.
pub fn exact_partial_vertex_cover(g: &Graph, t: usize, opts: &SolveOptions) -> Result<Solved<CoverWitness>> {
    if t == 0 {
        return Ok(Solved { witness: Some(CoverWitness::new(g, Vec::new())), stats: no_work() });
    }
    let (split, origin) = degree_split(g, t)?;
    let m = split.edge_count();
    if m < t {
        return Ok(Solved::none(no_work()));
    }
    let items = items(&split, t);
    let need = t as u32;
    let found = match opts.engine {
        Engine::ColorCode => {
            check_bits(t * t)?;
            let params = FamilyParams::new(m, t, t, opts.multiplier)?;
            let (hit, stats) =
                search_blocks(&params, opts.exec, |b: &HashBlock| exact_labels(&items, |e| b.bucket(e + 1), need));
            Solved { witness: hit.map(|(_, s)| s), stats }
        }
        Engine::Exhaustive => {
            let mut schedule = Schedule::new(Engine::Exhaustive, m, t, t, opts.multiplier)?;
            let (hit, stats) =
                search_members(&mut schedule, opts.exec, |col| exact_labels(&items, |e| col[e] as usize - 1, need));
            Solved { witness: hit.map(|h| h.value), stats }
        }
    };
    Ok(found.map(|chosen| {
        let vertices = chosen.iter().flat_map(|&i| items[i].vertices.iter().map(|&v| origin[v])).collect();
        CoverWitness::new(g, vertices)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SolveOptions {
        SolveOptions::default()
    }

    #[test]
    fn kernel_examples() {
        let k = buss_kernel(&Graph::star(5), 1).unwrap();
        assert_eq!(k.forced, vec![0]);
        assert_eq!(k.residual.vertex_count(), 0);
        assert_eq!(k.verdict, KernelVerdict::Kernelized);

        let k = buss_kernel(&Graph::complete(5), 1).unwrap();
        assert_eq!(k.verdict, KernelVerdict::TooManyForced);

        let k = buss_kernel(&Graph::cycle(5), 2).unwrap();
        assert!(k.forced.is_empty());
        assert_eq!(k.residual.vertex_count(), 5);
        assert_eq!(k.verdict, KernelVerdict::Kernelized);
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(vertex_cover(&Graph::star(5), 1).unwrap().witness.unwrap().vertices, vec![0]);
        assert!(!vertex_cover(&Graph::cycle(5), 2).unwrap().found());
        assert_eq!(vertex_cover(&Graph::cycle(5), 3).unwrap().witness.unwrap().vertices.len(), 3);
        assert_eq!(vertex_cover(&Graph::empty(3), 0).unwrap().witness.unwrap().vertices, Vec::<Vertex>::new());
    }

    #[test]
    fn partial_examples() {
        let w = partial_vertex_cover(&Graph::star(4), 1, 4, &opts()).unwrap().witness.unwrap();
        assert_eq!((w.vertices, w.covered.len()), (vec![0], 4));
        for engine in [Engine::ColorCode, Engine::Exhaustive] {
            let o = opts().with_engine(engine);
            assert!(!partial_vertex_cover(&Graph::cycle(5), 1, 3, &o).unwrap().found());
            let w = partial_vertex_cover(&Graph::cycle(5), 2, 4, &o).unwrap().witness.unwrap();
            assert_eq!(w.vertices.len(), 2);
            assert!(w.covered.len() >= 4);
        }
    }

    #[test]
    fn exact_examples() {
        for engine in [Engine::ColorCode, Engine::Exhaustive] {
            let o = opts().with_engine(engine);
            let w = exact_partial_vertex_cover(&Graph::cycle(4), 2, &o).unwrap().witness.unwrap();
            assert_eq!(w.covered.len(), 2);
            assert!(!exact_partial_vertex_cover(&Graph::complete(3), 1, &o).unwrap().found());
            let w = exact_partial_vertex_cover(&Graph::complete(4), 5, &o).unwrap().witness.unwrap();
            assert_eq!(w.covered.len(), 5);
            assert_eq!(w.vertices.len(), 2);
        }
        let w = exact_partial_vertex_cover(&Graph::complete(3), 0, &opts()).unwrap().witness.unwrap();
        assert!(w.vertices.is_empty());
    }

    #[test]
    fn splitting_marks_red() {
        let (s, origin) = degree_split(&Graph::star(3), 2).unwrap();
        assert_eq!(s.vertex_count(), 7);
        assert_eq!(s.degree(0), 0);
        assert_eq!(s.label(0), Some("red"));
        assert!((4..7).all(|v| origin[v] == 0 && s.label(v) == Some("red")));
        assert_eq!(s.edge_count(), 3);
    }

    #[test]
    fn combinations() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all.last().unwrap(), &vec![2, 3]);
    }
}
