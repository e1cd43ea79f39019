//! Color-coded embedding of a decomposed pattern into a host graph.
//!
//! Colors are identified with pattern vertices: under a coloring `lambda`,
//! pattern vertex `h` may only be mapped to host vertices of color `h + 1`.
//! Distinct pattern vertices therefore always land on distinct host
//! vertices, and a universal family guarantees that some member colors the
//! image of any embedding exactly this way.
//!
//! For a fixed coloring the dynamic program walks the decomposition bottom
//! up, one level per phase. At each node it keeps the bag tuples that are
//! partial homomorphisms and agree with some surviving tuple of every child
//! on the shared vertices.

use std::collections::HashSet;

use crate::check::check_embedding;
use crate::error::{domain, guard, Error, Result};
use crate::graph::{
    build_pattern, validate_tree_decomposition, Graph, Pattern, PatternSpec, TreeDecomposition, Vertex,
};
use crate::runner::{no_work, search_members, Engine, Schedule, SolveOptions, Solved};

/// Largest host for the exhaustive engine.
pub const EXHAUSTIVE_MAX_HOST: usize = 10;

/// An injective homomorphism: `assignment[h]` is the image of pattern
/// vertex `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub assignment: Vec<Vertex>,
}

/// Surviving bag tuples per decomposition node, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodSetTable {
    pub survivors: Vec<Vec<Vec<Vertex>>>,
}

/// Work counters of one per-coloring pass.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DpStats {
    /// Sequential phases; one per decomposition level.
    pub phases: usize,
    /// Candidate (partial) tuples examined at each node.
    pub node_checks: Vec<u64>,
}

/// A pattern, its decomposition and a host, prepared for repeated
/// per-coloring evaluation.
#[derive(Debug)]
pub struct Embedder<'a> {
    h: &'a Graph,
    td: &'a TreeDecomposition,
    g: &'a Graph,
    anchor: Vec<Option<Vertex>>,
    levels: Vec<Vec<usize>>,
    /// For each node: bag positions shared with the parent, and the
    /// matching positions in the parent's bag.
    link: Vec<(Vec<usize>, Vec<usize>)>,
    /// For each node: ordered bag position pairs `(i, j)` that must map to
    /// a host arc `t[i] -> t[j]`.
    constraints: Vec<Vec<(usize, usize)>>,
}

impl<'a> Embedder<'a> {
    pub fn new(h: &'a Graph, td: &'a TreeDecomposition, g: &'a Graph, anchors: &[(Vertex, Vertex)]) -> Result<Self> {
        let check = validate_tree_decomposition(h, td);
        if !check.is_valid() {
            return Err(Error::InvalidDecomposition(format!("{check:?}")));
        }
        if h.is_directed() != g.is_directed() {
            return Err(domain("pattern and host must both be directed or both undirected"));
        }
        let mut anchor = vec![None; h.vertex_count()];
        let mut targets = HashSet::new();
        for &(p, v) in anchors {
            if p >= h.vertex_count() || v >= g.vertex_count() {
                return Err(domain(format!("anchor {} -> {} references a missing vertex", p + 1, v + 1)));
            }
            match anchor[p] {
                Some(w) if w == v => continue,
                Some(_) => return Err(domain(format!("pattern vertex {} anchored twice", p + 1))),
                None => {}
            }
            if !targets.insert(v) {
                return Err(domain(format!("host vertex {} is the target of two anchors", v + 1)));
            }
            anchor[p] = Some(v);
        }

        let mut link = vec![(Vec::new(), Vec::new()); td.node_count()];
        let mut constraints = Vec::with_capacity(td.node_count());
        for node in 0..td.node_count() {
            let bag = td.bag(node);
            if let Some(parent) = td.parent(node) {
                let pbag = td.bag(parent);
                for (i, v) in bag.iter().enumerate() {
                    if let Ok(j) = pbag.binary_search(v) {
                        link[node].0.push(i);
                        link[node].1.push(j);
                    }
                }
            }
            let mut cons = Vec::new();
            for i in 0..bag.len() {
                for j in 0..bag.len() {
                    let ordered = if h.is_directed() { i != j } else { i < j };
                    if ordered && h.has_edge(bag[i], bag[j]) {
                        cons.push((i, j));
                    }
                }
            }
            constraints.push(cons);
        }
        Ok(Embedder { h, td, g, anchor, levels: td.bottom_up_levels(), link, constraints })
    }

    pub fn pattern(&self) -> &Graph {
        self.h
    }

    pub fn host(&self) -> &Graph {
        self.g
    }

    /// Runs the full bottom-up pass for one coloring, without stopping at
    /// empty nodes, and reports the work performed.
    pub fn good_sets(&self, colors: &[u8]) -> (GoodSetTable, DpStats) {
        let mut stats = DpStats { phases: 0, node_checks: vec![0; self.td.node_count()] };
        let survivors = self.pass(colors, &mut stats, false).unwrap_or_default();
        (GoodSetTable { survivors }, stats)
    }

    /// Every tuple surviving at a node agrees with some surviving tuple at
    /// each child on the shared bag vertices.
    pub fn audit(&self, table: &GoodSetTable) -> bool {
        (0..self.td.node_count()).all(|node| {
            self.td.children(node).iter().all(|&child| {
                let (cpos, ppos) = &self.link[child];
                table.survivors[node].iter().all(|t| {
                    table.survivors[child].iter().any(|s| cpos.iter().zip(ppos).all(|(&ci, &pi)| s[ci] == t[pi]))
                })
            })
        })
    }

    /// The embedding found under one coloring, if any.
    pub fn try_coloring(&self, colors: &[u8]) -> Option<Embedding> {
        let mut stats = DpStats { phases: 0, node_checks: vec![0; self.td.node_count()] };
        let table = self.pass(colors, &mut stats, true)?;
        self.reconstruct(&table)
    }

    pub fn solve(&self, opts: &SolveOptions) -> Result<Solved<Embedding>> {
        let (hn, gn) = (self.h.vertex_count(), self.g.vertex_count());
        if hn == 0 {
            return Ok(Solved { witness: Some(Embedding { assignment: Vec::new() }), stats: no_work() });
        }
        if hn > gn {
            return Ok(Solved::none(no_work()));
        }
        if opts.engine == Engine::Exhaustive && gn > EXHAUSTIVE_MAX_HOST {
            return Err(guard(format!(
                "exhaustive engine allows at most {EXHAUSTIVE_MAX_HOST} host vertices, got {gn}"
            )));
        }
        let mut schedule = Schedule::new(opts.engine, gn, hn, hn, opts.multiplier)?;
        let (hit, stats) = search_members(&mut schedule, opts.exec, |colors| self.try_coloring(colors));
        let witness = hit.map(|h| h.value);
        if let Some(w) = &witness {
            let anchors: Vec<(Vertex, Vertex)> =
                self.anchor.iter().enumerate().filter_map(|(p, a)| a.map(|v| (p, v))).collect();
            debug_assert!(check_embedding(self.h, self.g, &anchors, &w.assignment));
        }
        Ok(Solved { witness, stats })
    }

    fn candidates(&self, colors: &[u8]) -> Vec<Vec<Vertex>> {
        let hn = self.h.vertex_count();
        let mut by_color = vec![Vec::new(); hn];
        for (v, &c) in colors.iter().enumerate() {
            let c = c as usize - 1;
            if c < hn {
                by_color[c].push(v);
            }
        }
        for (p, a) in self.anchor.iter().enumerate() {
            if let Some(v) = a {
                by_color[p].retain(|w| w == v);
            }
        }
        by_color
    }

    fn pass(&self, colors: &[u8], stats: &mut DpStats, stop_early: bool) -> Option<Vec<Vec<Vec<Vertex>>>> {
        let cand = self.candidates(colors);
        let mut survivors: Vec<Vec<Vec<Vertex>>> = vec![Vec::new(); self.td.node_count()];
        let mut projections: Vec<HashSet<Vec<Vertex>>> = vec![HashSet::new(); self.td.node_count()];
        for level in &self.levels {
            stats.phases += 1;
            for &node in level {
                let found = self.node_survivors(node, &cand, &projections, &mut stats.node_checks[node]);
                if found.is_empty() && stop_early {
                    return None;
                }
                let cpos = &self.link[node].0;
                projections[node] = found.iter().map(|t| cpos.iter().map(|&i| t[i]).collect()).collect();
                survivors[node] = found;
            }
        }
        Some(survivors)
    }

    fn node_survivors(
        &self,
        node: usize,
        cand: &[Vec<Vertex>],
        projections: &[HashSet<Vec<Vertex>>],
        checks: &mut u64,
    ) -> Vec<Vec<Vertex>> {
        let bag = self.td.bag(node);
        let lists: Vec<&[Vertex]> = bag.iter().map(|&h| cand[h].as_slice()).collect();
        let mut out = Vec::new();
        let mut tuple = Vec::with_capacity(bag.len());
        self.extend(node, &lists, &mut tuple, projections, checks, &mut out);
        out
    }

    /// Depth-first extension of a partial bag tuple; constraints are
    /// checked as soon as both endpoints are placed.
    fn extend(
        &self,
        node: usize,
        lists: &[&[Vertex]],
        tuple: &mut Vec<Vertex>,
        projections: &[HashSet<Vec<Vertex>>],
        checks: &mut u64,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let pos = tuple.len();
        if pos == lists.len() {
            let consistent = self.td.children(node).iter().all(|&child| {
                let key: Vec<Vertex> = self.link[child].1.iter().map(|&i| tuple[i]).collect();
                projections[child].contains(&key)
            });
            if consistent {
                out.push(tuple.clone());
            }
            return;
        }
        for &v in lists[pos] {
            *checks += 1;
            let ok = self.constraints[node].iter().all(|&(i, j)| {
                if i == pos && j < pos {
                    self.g.has_edge(v, tuple[j])
                } else if j == pos && i < pos {
                    self.g.has_edge(tuple[i], v)
                } else {
                    true
                }
            });
            if ok {
                tuple.push(v);
                self.extend(node, lists, tuple, projections, checks, out);
                tuple.pop();
            }
        }
    }

    /// Lexicographically smallest root tuple, then top-down the smallest
    /// child tuple consistent with what is already assigned.
    fn reconstruct(&self, table: &[Vec<Vec<Vertex>>]) -> Option<Embedding> {
        let mut assignment: Vec<Option<Vertex>> = vec![None; self.h.vertex_count()];
        let root = self.td.root();
        let first = table[root].first()?;
        for (&h, &v) in self.td.bag(root).iter().zip(first) {
            assignment[h] = Some(v);
        }
        let mut stack = vec![root];
        while let Some(node) = stack.pop() {
            for &child in self.td.children(node) {
                let bag = self.td.bag(child);
                let (cpos, _) = &self.link[child];
                let pick = table[child]
                    .iter()
                    .find(|t| cpos.iter().all(|&i| assignment[bag[i]] == Some(t[i])))
                    .expect("parent tuple survived only with a consistent child tuple");
                for (&h, &v) in bag.iter().zip(pick) {
                    assignment[h] = Some(v);
                }
                stack.push(child);
            }
        }
        let assignment = assignment.into_iter().collect::<Option<Vec<_>>>()?;
        Some(Embedding { assignment })
    }
}

/// Decides whether `h` embeds into `g` respecting `anchors`
/// (pairs `(pattern vertex, host vertex)`).
pub fn embed(
    h: &Graph,
    td: &TreeDecomposition,
    g: &Graph,
    anchors: &[(Vertex, Vertex)],
    opts: &SolveOptions,
) -> Result<Solved<Embedding>> {
    Embedder::new(h, td, g, anchors)?.solve(opts)
}

/// [`embed`] with a pattern's own decomposition.
pub fn embed_pattern(
    pattern: &Pattern,
    g: &Graph,
    anchors: &[(Vertex, Vertex)],
    opts: &SolveOptions,
) -> Result<Solved<Embedding>> {
    embed(&pattern.graph, &pattern.td, g, anchors, opts)
}

/// Builds a pattern and orients it when the host is directed.
pub(crate) fn pattern_for(spec: &PatternSpec, g: &Graph) -> Result<Pattern> {
    let p = build_pattern(spec)?;
    Ok(if g.is_directed() { p.oriented() } else { p })
}

/// Is there a path (following arc directions) with at most `d` edges from
/// `s` to `t`? The witness lists its vertices.
pub fn distance(g: &Graph, s: Vertex, t: Vertex, d: usize, opts: &SolveOptions) -> Result<Solved<Vec<Vertex>>> {
    let n = g.vertex_count();
    if s >= n || t >= n {
        return Err(domain("distance endpoints must be host vertices"));
    }
    let mut stats = no_work();
    let shortest = usize::from(s != t);
    for j in shortest..=d.min(n.saturating_sub(1)) {
        let pattern = pattern_for(&PatternSpec::AnchoredPath { length: j }, g)?;
        let anchors = [(pattern.anchors[0], s), (pattern.anchors[1], t)];
        let solved = embed_pattern(&pattern, g, &anchors, opts)?;
        stats.absorb(&solved.stats);
        if let Some(e) = solved.witness {
            return Ok(Solved { witness: Some(e.assignment), stats });
        }
    }
    Ok(Solved::none(stats))
}

/// Is there a simple path on `k` vertices? The witness lists them in path
/// order.
pub fn k_path(g: &Graph, k: usize, opts: &SolveOptions) -> Result<Solved<Vec<Vertex>>> {
    let pattern = pattern_for(&PatternSpec::Paths { k: 1, l: k }, g)?;
    Ok(embed_pattern(&pattern, g, &[], opts)?.map(|e| e.assignment))
}

/// Are there `k` pairwise vertex-disjoint edges?
pub fn matching(g: &Graph, k: usize, opts: &SolveOptions) -> Result<Solved<Vec<(Vertex, Vertex)>>> {
    let pattern = pattern_for(&PatternSpec::Matching { k }, g)?;
    Ok(embed_pattern(&pattern, g, &[], opts)?.map(|e| e.assignment.chunks(2).map(|p| (p[0], p[1])).collect()))
}
