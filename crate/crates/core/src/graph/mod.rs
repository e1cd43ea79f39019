//! Graphs, tree decompositions and pattern graphs.
//!
//! Vertices are dense indices `0..n` inside the library; the text format
//! and every user-facing output use `1..=n`. Vertex order is part of the
//! data model: several algorithms pick the "smallest" vertex of a set.

mod decomposition;
mod io;
mod pattern;

use std::collections::{BTreeMap, VecDeque};

use crate::error::{domain, Result};

pub use decomposition::{exact_tree_decomposition, validate_tree_decomposition, TdValidation, TreeDecomposition};
pub use io::{parse_graph, serialize_graph};
pub use pattern::{build_pattern, Pattern, PatternSpec};

pub type Vertex = usize;

/// A simple graph, optionally directed, with optional vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    directed: bool,
    /// Sorted. Undirected edges are stored once as `(u, v)` with `u < v`.
    edges: Vec<(Vertex, Vertex)>,
    /// Out-neighbors (all neighbors when undirected), sorted.
    out: Vec<Vec<Vertex>>,
    /// In-neighbors; equal to `out` when undirected.
    inc: Vec<Vec<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range
    /// endpoints. For undirected graphs `(u, v)` and `(v, u)` are the same
    /// edge.
    pub fn new(n: usize, directed: bool, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(domain(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(domain(format!("self-loop at {u}")));
            }
            list.push(if directed || u < v { (u, v) } else { (v, u) });
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(domain(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted(n, directed, list))
    }

    pub(crate) fn from_sorted(n: usize, directed: bool, edges: Vec<(Vertex, Vertex)>) -> Self {
        let (out, inc) = build_adjacency(n, directed, &edges);
        Graph { n, directed, edges, out, inc, labels: BTreeMap::new() }
    }

    pub fn undirected(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::new(n, false, edges.iter().copied())
    }

    pub fn directed(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::new(n, true, edges.iter().copied())
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, false, Vec::new())
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted(n, false, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::from_sorted(n, false, edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted(n, false, edges)
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_sorted(leaves + 1, false, (1..=leaves).map(|v| (0, v)).collect())
    }

    /// Disjoint union; the vertices of `parts[i]` follow those of
    /// `parts[i - 1]`.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Self> {
        let directed = parts.first().is_some_and(|g| g.directed);
        if parts.iter().any(|g| g.directed != directed) {
            return Err(domain("cannot mix directed and undirected graphs"));
        }
        let mut offset = 0;
        let mut edges = Vec::new();
        for g in parts {
            edges.extend(g.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += g.n;
        }
        edges.sort_unstable();
        Ok(Self::from_sorted(offset, directed, edges))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Out-neighbors of `v` (all neighbors for undirected graphs).
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inc[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        if self.directed {
            self.out[v].len() + self.inc[v].len()
        } else {
            self.out[v].len()
        }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Arc `u -> v` (or edge `{u, v}` when undirected).
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = if self.directed || u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        assert!(v < self.n, "label on missing vertex {v}");
        self.labels.insert(v, label.into());
    }

    /// Neighbors ignoring direction.
    pub fn undirected_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        if !self.directed {
            return self.out[v].clone();
        }
        let mut all: Vec<Vertex> = self.out[v].iter().chain(&self.inc[v]).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Rebuilds adjacency from the edge list and compares.
    pub fn audit(&self) -> bool {
        let (out, inc) = build_adjacency(self.n, self.directed, &self.edges);
        let loops = self.edges.iter().any(|&(u, v)| u == v);
        let dups = self.edges.windows(2).any(|w| w[0] == w[1]);
        out == self.out && inc == self.inc && !loops && !dups
    }

    /// Undirected BFS distances from `source`, `None` when unreachable.
    pub fn distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.out[u].iter().chain(if self.directed { &self.inc[u][..] } else { &[] }) {
                if dist[*w].is_none() {
                    dist[*w] = Some(d + 1);
                    queue.push_back(*w);
                }
            }
        }
        dist
    }

    /// Subgraph induced on `vertices` (taken in increasing order), with the
    /// map from new to old indices. Labels are carried over.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .map(|(a, b)| if self.directed || a < b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        let mut g = Graph::from_sorted(keep.len(), self.directed, edges);
        for (&v, l) in &self.labels {
            if index[v] != usize::MAX {
                g.labels.insert(index[v], l.clone());
            }
        }
        (g, keep)
    }

    /// Connected components (ignoring direction), each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.undirected_neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The same graph with every edge `{u, v}`, `u < v`, turned into the
    /// arc `u -> v`.
    pub fn oriented(&self) -> Graph {
        let mut g = Graph::from_sorted(self.n, true, self.edges.clone());
        g.labels = self.labels.clone();
        g
    }
}

fn build_adjacency(n: usize, directed: bool, edges: &[(Vertex, Vertex)]) -> (Vec<Vec<Vertex>>, Vec<Vec<Vertex>>) {
    let mut out = vec![Vec::new(); n];
    let mut inc = vec![Vec::new(); n];
    for &(u, v) in edges {
        out[u].push(v);
        if directed {
            inc[v].push(u);
        } else {
            out[v].push(u);
        }
    }
    for list in out.iter_mut().chain(inc.iter_mut()) {
        list.sort_unstable();
    }
    if !directed {
        inc.clone_from(&out);
    }
    (out, inc)
}

/// The induced subgraph on all vertices within undirected distance `r` of
/// `center`, and the map back to `g`.
pub fn ball(g: &Graph, center: Vertex, r: usize) -> Result<(Graph, Vec<Vertex>)> {
    if center >= g.vertex_count() {
        return Err(domain(format!("center {center} is not a vertex")));
    }
    let dist = g.distances(center);
    let inside: Vec<Vertex> = (0..g.vertex_count()).filter(|&v| dist[v].is_some_and(|d| d <= r)).collect();
    Ok(g.induced(&inside))
}

pub fn complement(g: &Graph) -> Result<Graph> {
    if g.is_directed() {
        return Err(domain("complement is defined for undirected graphs only"));
    }
    let n = g.vertex_count();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
    let mut c = Graph::from_sorted(n, false, edges);
    c.labels = g.labels.clone();
    Ok(c)
}
