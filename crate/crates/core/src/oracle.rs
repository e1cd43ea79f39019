//! Brute-force reference solvers.
//!
//! Nothing here touches coloring families. Every answer comes from plain
//! enumeration, and every guard is a hard error so that a test can never
//! silently skip a case.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{guard, Result};
use crate::graph::{Graph, Vertex};

/// Largest host graph for the oracle.
pub const MAX_HOST: usize = 10;
/// Vertex cover subset enumeration is cheap enough to allow a larger host.
pub const MAX_COVER_HOST: usize = 12;
/// Largest `k`, `t`, `l` or cluster count.
pub const MAX_PARAM: usize = 4;
/// Largest edit budget.
pub const MAX_EDITS: usize = 3;
/// Largest pattern for embedding.
pub const MAX_PATTERN: usize = 8;

fn host_guard(g: &Graph, limit: usize) -> Result<()> {
    if g.vertex_count() > limit {
        return Err(guard(format!("oracle allows at most {limit} host vertices, got {}", g.vertex_count())));
    }
    Ok(())
}

fn param_guard(name: &str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(guard(format!("oracle allows {name} <= {limit}, got {value}")));
    }
    Ok(())
}

/// A problem instance for [`oracle_solve`].
#[derive(Debug, Clone)]
pub enum Instance {
    Embed { h: Graph, g: Graph, anchors: Vec<(Vertex, Vertex)> },
    Distance { g: Graph, s: Vertex, t: Vertex, d: usize },
    KPath { g: Graph, k: usize },
    Matching { g: Graph, k: usize },
    Pack { g: Graph, components: Vec<Graph> },
    VertexCover { g: Graph, k: usize },
    PartialVertexCover { g: Graph, k: usize, t: usize },
    ExactPartialVertexCover { g: Graph, t: usize },
    ClusterEditing { g: Graph, k: usize, l: usize },
    ManyClusterEditing { g: Graph, k: usize },
    ClusterEditingFreeL { g: Graph, k: usize, l: usize },
    PPartite { g: Graph, k: usize, p: usize },
    Multipartite { g: Graph, k: usize, parts: Vec<usize> },
    CutConnected { g: Graph, k: usize, l: usize, terminal: Option<Vertex> },
    CutAtMost { g: Graph, k: usize, l: usize, terminal: Option<Vertex> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleWitness {
    /// Image of each pattern vertex (embedding, path, packing in
    /// concatenated component order).
    Assignment(Vec<Vertex>),
    Edges(Vec<(Vertex, Vertex)>),
    Vertices(Vec<Vertex>),
    Edits {
        additions: Vec<(Vertex, Vertex)>,
        deletions: Vec<(Vertex, Vertex)>,
        clusters: Vec<Vec<Vertex>>,
    },
    Cut {
        x: Vec<Vertex>,
        s: Vec<Vertex>,
        y: Vec<Vertex>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleAnswer {
    pub answer: bool,
    pub witness: Option<OracleWitness>,
}

impl OracleAnswer {
    fn from(w: Option<OracleWitness>) -> Self {
        OracleAnswer { answer: w.is_some(), witness: w }
    }
}

pub fn oracle_solve(inst: &Instance) -> Result<OracleAnswer> {
    use OracleWitness as W;
    let w = match inst {
        Instance::Embed { h, g, anchors } => embed(h, g, anchors)?.map(W::Assignment),
        Instance::Distance { g, s, t, d } => distance(g, *s, *t, *d)?.map(W::Assignment),
        Instance::KPath { g, k } => k_path(g, *k)?.map(W::Assignment),
        Instance::Matching { g, k } => matching(g, *k)?.map(W::Edges),
        Instance::Pack { g, components } => pack(g, components)?.map(|c| W::Assignment(c.concat())),
        Instance::VertexCover { g, k } => vertex_cover(g, *k)?.map(W::Vertices),
        Instance::PartialVertexCover { g, k, t } => partial_vertex_cover(g, *k, *t)?.map(W::Vertices),
        Instance::ExactPartialVertexCover { g, t } => exact_partial_vertex_cover(g, *t)?.map(W::Vertices),
        Instance::ClusterEditing { g, k, l } | Instance::ClusterEditingFreeL { g, k, l } => {
            ClusterProfile::new(g, *k)?.cliques(Some(*l), *k).map(edits_witness)
        }
        Instance::ManyClusterEditing { g, k } => ClusterProfile::new(g, *k)?.cliques(None, *k).map(edits_witness),
        Instance::PPartite { g, k, p } => ClusterProfile::new(g, *k)?.p_partite(*p, *k).map(edits_witness),
        Instance::Multipartite { g, k, parts } => {
            ClusterProfile::new(g, *k)?.multipartite(parts, *k).map(edits_witness)
        }
        Instance::CutConnected { g, k, l, terminal } => cut(g, *k, *l, *terminal, true)?.map(cut_witness),
        Instance::CutAtMost { g, k, l, terminal } => cut(g, *k, *l, *terminal, false)?.map(cut_witness),
    };
    Ok(OracleAnswer::from(w))
}

fn edits_witness(e: EditOutcome) -> OracleWitness {
    OracleWitness::Edits { additions: e.additions, deletions: e.deletions, clusters: e.clusters }
}

fn cut_witness((x, s, y): (Vec<Vertex>, Vec<Vertex>, Vec<Vertex>)) -> OracleWitness {
    OracleWitness::Cut { x, s, y }
}

fn arc(g: &Graph, u: Vertex, v: Vertex) -> bool {
    if g.is_directed() {
        g.edges().binary_search(&(u, v)).is_ok()
    } else {
        g.edges().binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

/// First injective homomorphism in lexicographic order of the assignment.
pub fn embed(h: &Graph, g: &Graph, anchors: &[(Vertex, Vertex)]) -> Result<Option<Vec<Vertex>>> {
    host_guard(g, MAX_HOST)?;
    if h.vertex_count() > MAX_PATTERN {
        return Err(guard(format!("oracle allows patterns of at most {MAX_PATTERN} vertices")));
    }
    fn rec(h: &Graph, g: &Graph, anchors: &[(Vertex, Vertex)], map: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
        let p = map.len();
        if p == h.vertex_count() {
            return true;
        }
        for v in 0..g.vertex_count() {
            if used[v] || anchors.iter().any(|&(a, t)| a == p && t != v) {
                continue;
            }
            let fits = (0..p).all(|q| (!arc(h, q, p) || arc(g, map[q], v)) && (!arc(h, p, q) || arc(g, v, map[q])));
            if fits {
                map.push(v);
                used[v] = true;
                if rec(h, g, anchors, map, used) {
                    return true;
                }
                used[v] = false;
                map.pop();
            }
        }
        false
    }
    let mut map = Vec::new();
    let mut used = vec![false; g.vertex_count()];
    Ok(rec(h, g, anchors, &mut map, &mut used).then_some(map))
}

/// Shortest path by BFS along arcs, if its length is at most `d`.
pub fn distance(g: &Graph, s: Vertex, t: Vertex, d: usize) -> Result<Option<Vec<Vertex>>> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for v in 0..n {
            if dist[v] == usize::MAX && arc(g, u, v) {
                dist[v] = dist[u] + 1;
                prev[v] = u;
                q.push_back(v);
            }
        }
    }
    if dist[t] > d {
        return Ok(None);
    }
    let mut path = vec![t];
    while *path.last().unwrap() != s {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    Ok(Some(path))
}

pub fn k_path(g: &Graph, k: usize) -> Result<Option<Vec<Vertex>>> {
    let h = Graph::path(k);
    embed(&if g.is_directed() { h.oriented() } else { h }, g, &[])
}

/// `k` pairwise disjoint edges, by enumerating `k`-subsets of edges.
pub fn matching(g: &Graph, k: usize) -> Result<Option<Vec<(Vertex, Vertex)>>> {
    host_guard(g, MAX_HOST)?;
    let edges = g.edges();
    Ok(subsets(edges.len(), k).find_map(|idx| {
        let mut used = vec![false; g.vertex_count()];
        let chosen: Vec<_> = idx.iter().map(|&i| edges[i]).collect();
        chosen
            .iter()
            .all(|&(u, v)| !std::mem::replace(&mut used[u], true) && !std::mem::replace(&mut used[v], true))
            .then_some(chosen)
    }))
}

/// Disjoint copies of all components, by embedding their union.
pub fn pack(g: &Graph, components: &[Graph]) -> Result<Option<Vec<Vec<Vertex>>>> {
    let h = Graph::disjoint_union(components)?;
    let h = if g.is_directed() { h.oriented() } else { h };
    Ok(embed(&h, g, &[])?.map(|a| {
        let mut out = Vec::new();
        let mut at = 0;
        for c in components {
            out.push(a[at..at + c.vertex_count()].to_vec());
            at += c.vertex_count();
        }
        out
    }))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = (k <= n).then(|| (0..k).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut c = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                next = Some(c);
                break;
            }
        }
        Some(cur)
    })
}

fn covered(g: &Graph, set: &[Vertex]) -> usize {
    g.edges().iter().filter(|(u, v)| set.contains(u) || set.contains(v)).count()
}

pub fn vertex_cover(g: &Graph, k: usize) -> Result<Option<Vec<Vertex>>> {
    host_guard(g, MAX_COVER_HOST)?;
    let n = g.vertex_count();
    Ok((0..=k.min(n)).find_map(|size| subsets(n, size).find(|s| covered(g, s) == g.edge_count())))
}

pub fn partial_vertex_cover(g: &Graph, k: usize, t: usize) -> Result<Option<Vec<Vertex>>> {
    host_guard(g, MAX_COVER_HOST)?;
    param_guard("k", k, MAX_PARAM)?;
    param_guard("t", t, MAX_PARAM)?;
    let n = g.vertex_count();
    Ok((0..=k.min(n)).find_map(|size| subsets(n, size).find(|s| covered(g, s) >= t)))
}

pub fn exact_partial_vertex_cover(g: &Graph, t: usize) -> Result<Option<Vec<Vertex>>> {
    host_guard(g, MAX_COVER_HOST)?;
    param_guard("t", t, MAX_PARAM)?;
    let n = g.vertex_count();
    Ok((0..=n).find_map(|size| subsets(n, size).find(|s| covered(g, s) == t)))
}

/// `(X, S, Y)`: the chosen set, its neighborhood and the rest.
pub type CutSets = (Vec<Vertex>, Vec<Vertex>, Vec<Vertex>);

/// Cut search over every candidate `X`: connected `X` of size `l`, or
/// `X` with `1 < |X| <= l`.
pub fn cut(g: &Graph, k: usize, l: usize, terminal: Option<Vertex>, connected: bool) -> Result<Option<CutSets>> {
    host_guard(g, MAX_HOST)?;
    param_guard("k", k, MAX_PARAM)?;
    param_guard("l", l, MAX_PARAM)?;
    let n = g.vertex_count();
    let sizes: Vec<usize> = if connected { vec![l] } else { (2..=l).collect() };
    for size in sizes {
        for x in subsets(n, size) {
            if terminal.is_some_and(|t| !x.contains(&t)) {
                continue;
            }
            if connected && g.induced(&x).0.components().len() != 1 {
                continue;
            }
            let s: Vec<Vertex> =
                (0..n).filter(|v| !x.contains(v) && x.iter().any(|&u| arc(g, u, *v) || arc(g, *v, u))).collect();
            if s.len() <= k {
                let y = (0..n).filter(|v| !x.contains(v) && !s.contains(v)).collect();
                return Ok(Some((x, s, y)));
            }
        }
    }
    Ok(None)
}

/// `k` centers with pairwise distance above `2r` whose balls satisfy
/// `pred`, by enumerating center sets.
pub fn scattered_balls(
    g: &Graph,
    k: usize,
    r: usize,
    pred: &dyn Fn(&Graph, Vertex) -> bool,
) -> Result<Option<Vec<Vertex>>> {
    host_guard(g, MAX_HOST)?;
    param_guard("k", k, MAX_PARAM)?;
    let n = g.vertex_count();
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|v| g.distances(v)).collect();
    let good: Vec<bool> = (0..n)
        .map(|c| {
            let inside: Vec<Vertex> = (0..n).filter(|&v| dist[c][v].is_some_and(|d| d <= r)).collect();
            let (b, map) = g.induced(&inside);
            pred(&b, map.iter().position(|&v| v == c).unwrap())
        })
        .collect();
    Ok(subsets(n, k).find(|s| {
        s.iter().all(|&c| good[c])
            && s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| dist[a][b].is_none_or(|d| d > 2 * r)))
    }))
}

/// The cheapest edit set reaching some target, with the resulting
/// components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditOutcome {
    pub additions: Vec<(Vertex, Vertex)>,
    pub deletions: Vec<(Vertex, Vertex)>,
    pub clusters: Vec<Vec<Vertex>>,
}

impl EditOutcome {
    fn cost(&self) -> usize {
        self.additions.len() + self.deletions.len()
    }
}

/// Every edit set of at most `budget` pairs, applied once and summarized.
/// Answers to all cluster-style questions on one graph come from the same
/// enumeration.
#[derive(Debug, Clone)]
pub struct ClusterProfile {
    /// Cheapest outcome for each number of clique components.
    cliques: BTreeMap<usize, EditOutcome>,
    /// Cheapest outcome making the whole graph complete `p`-partite.
    whole: BTreeMap<usize, EditOutcome>,
    /// Cheapest outcome per sorted multiset of component part counts.
    multi: BTreeMap<Vec<usize>, EditOutcome>,
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl ClusterProfile {
    pub fn new(g: &Graph, budget: usize) -> Result<Self> {
        host_guard(g, MAX_HOST)?;
        param_guard("edit budget", budget, MAX_EDITS)?;
        let n = g.vertex_count();
        let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut profile = ClusterProfile {
            cliques: BTreeMap::new(),
            whole: BTreeMap::new(),
            multi: BTreeMap::new(),
            n,
            edges: g.edges().to_vec(),
        };
        let mut rows = vec![0u16; n];
        for &(u, v) in g.edges() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        for size in 0..=budget.min(pairs.len()) {
            for idx in subsets(pairs.len(), size) {
                let mut edited = rows.clone();
                for &i in &idx {
                    let (u, v) = pairs[i];
                    edited[u] ^= 1 << v;
                    edited[v] ^= 1 << u;
                }
                profile.record(&edited, &idx, &pairs, &rows);
            }
        }
        Ok(profile)
    }

    fn record(&mut self, rows: &[u16], idx: &[usize], pairs: &[(Vertex, Vertex)], original: &[u16]) {
        let n = rows.len();
        let mut comps: Vec<u16> = Vec::new();
        let mut seen = 0u16;
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u16 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = rows[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            comps.push(comp);
        }
        let all_cliques = comps.iter().all(|&c| bits(c).all(|v| rows[v] & c == c & !(1 << v)));
        let whole = parts_of(rows, if n == 0 { 0 } else { u16::MAX >> (16 - n) });
        let parts: Option<Vec<usize>> = comps.iter().map(|&c| parts_of(rows, c)).collect();
        let wanted = (all_cliques && !self.cliques.contains_key(&comps.len()))
            || whole.is_some_and(|p| !self.whole.contains_key(&p))
            || parts.as_ref().is_some_and(|p| {
                let mut p = p.clone();
                p.sort_unstable();
                !self.multi.contains_key(&p)
            });
        if !wanted {
            return;
        }
        let (mut additions, mut deletions) = (Vec::new(), Vec::new());
        for &i in idx {
            let (u, v) = pairs[i];
            if original[u] >> v & 1 == 1 {
                deletions.push((u, v));
            } else {
                additions.push((u, v));
            }
        }
        let clusters: Vec<Vec<Vertex>> = comps.iter().map(|&c| bits(c).collect()).collect();
        let outcome = EditOutcome { additions, deletions, clusters };
        if all_cliques {
            self.cliques.entry(comps.len()).or_insert_with(|| outcome.clone());
        }
        if let Some(p) = whole {
            self.whole.entry(p).or_insert_with(|| EditOutcome { clusters: vec![(0..n).collect()], ..outcome.clone() });
        }
        if let Some(mut parts) = parts {
            parts.sort_unstable();
            self.multi.entry(parts).or_insert(outcome);
        }
    }

    /// Cliques with `l` components (any number when `None`) within `k`
    /// edits.
    pub fn cliques(&self, l: Option<usize>, k: usize) -> Option<EditOutcome> {
        let fits = |o: &&EditOutcome| o.cost() <= k;
        match l {
            Some(l) => self.cliques.get(&l).filter(fits).cloned(),
            None => self.cliques.values().filter(fits).min_by_key(|o| o.cost()).cloned(),
        }
    }

    pub fn p_partite(&self, p: usize, k: usize) -> Option<EditOutcome> {
        self.whole.get(&p).filter(|o| o.cost() <= k).cloned()
    }

    /// Components complete `parts[i]`-partite; clusters are returned in
    /// `parts` order.
    pub fn multipartite(&self, parts: &[usize], k: usize) -> Option<EditOutcome> {
        let mut key = parts.to_vec();
        key.sort_unstable();
        let o = self.multi.get(&key).filter(|o| o.cost() <= k)?;
        let edited = apply(self.n, &self.edges, &o.additions, &o.deletions);
        let mut pool: Vec<Option<Vec<Vertex>>> = o.clusters.iter().cloned().map(Some).collect();
        let clusters = parts
            .iter()
            .map(|&p| {
                let slot = pool.iter().position(|c| {
                    c.as_ref().is_some_and(|c| crate::check::multipartite_parts(&edited.induced(c).0) == Some(p))
                })?;
                pool[slot].take()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(EditOutcome { clusters, ..o.clone() })
    }
}

fn bits(mask: u16) -> impl Iterator<Item = Vertex> {
    (0..16).filter(move |&v| mask >> v & 1 == 1)
}

/// Number of parts if `set` induces a complete multipartite graph, that is
/// if non-adjacency is an equivalence relation on it.
fn parts_of(rows: &[u16], set: u16) -> Option<usize> {
    let mut classes = Vec::new();
    for v in bits(set) {
        let class = set & !rows[v];
        if bits(class).any(|w| set & !rows[w] != class) {
            return None;
        }
        if !classes.contains(&class) {
            classes.push(class);
        }
    }
    Some(classes.len())
}

fn apply(
    n: usize,
    edges: &[(Vertex, Vertex)],
    additions: &[(Vertex, Vertex)],
    deletions: &[(Vertex, Vertex)],
) -> Graph {
    let kept = edges.iter().copied().filter(|e| deletions.binary_search(e).is_err());
    Graph::new(n, false, kept.chain(additions.iter().copied())).expect("edits stay inside the vertex range")
}

/// Every graph on exactly `n` vertices up to isomorphism, in canonical form
/// (`n <= 8`). Built by adding one vertex at a time to the graphs on
/// `n - 1` vertices and keeping one representative per canonical code.
pub fn graph_corpus(n: usize) -> Result<Vec<Graph>> {
    if n > 8 {
        return Err(guard(format!("graph corpus is limited to 8 vertices, got {n}")));
    }
    let mut level: Vec<u64> = vec![0];
    for size in 1..=n {
        let mut next = std::collections::BTreeSet::new();
        for &code in &level {
            for mask in 0u64..1 << (size - 1) {
                let mut grown = code;
                for u in 0..size - 1 {
                    if mask >> u & 1 == 1 {
                        grown |= 1 << pair_bit(u, size - 1);
                    }
                }
                next.insert(canonical_code(size, grown));
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level.into_iter().map(|code| decode(n, code)).collect())
}

/// Connected members of [`graph_corpus`].
pub fn connected_corpus(n: usize) -> Result<Vec<Graph>> {
    Ok(graph_corpus(n)?.into_iter().filter(|g| g.components().len() == 1).collect())
}

/// Bit of the pair `u < v` in an adjacency code.
fn pair_bit(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u
}

fn decode(n: usize, code: u64) -> Graph {
    let edges: Vec<(Vertex, Vertex)> =
        (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|&(u, v)| code >> pair_bit(u, v) & 1 == 1).collect();
    Graph::new(n, false, edges).expect("decoded edges are in range")
}

/// Smallest code over all relabelings that list vertices by their refined
/// degree class.
fn canonical_code(n: usize, code: u64) -> u64 {
    let adj = |u: usize, v: usize| u != v && code >> pair_bit(u.min(v), u.max(v)) & 1 == 1;
    let mut class: Vec<usize> = (0..n).map(|v| (0..n).filter(|&w| adj(v, w)).count()).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = (0..n).filter(|&w| adj(v, w)).map(|w| class[w]).collect();
                around.sort_unstable();
                (class[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let refined: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = class.iter().collect::<std::collections::BTreeSet<_>>().len();
        class = refined;
        if distinct.len() == before {
            break;
        }
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| class[v]);
    for v in order {
        match cells.last_mut() {
            Some(cell) if class[cell[0]] == class[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut placed = Vec::with_capacity(n);
    permute_cells(&cells, 0, &mut placed, &adj, &mut best);
    best
}

/// Tries every ordering inside each cell; `placed[i]` is the original
/// vertex put at position `i`.
fn permute_cells(
    cells: &[Vec<usize>],
    at: usize,
    placed: &mut Vec<usize>,
    adj: &dyn Fn(usize, usize) -> bool,
    best: &mut u64,
) {
    if at == cells.len() {
        let mut code = 0u64;
        for v in 1..placed.len() {
            for u in 0..v {
                if adj(placed[u], placed[v]) {
                    code |= 1 << pair_bit(u, v);
                }
            }
        }
        *best = (*best).min(code);
        return;
    }
    let mut cell = cells[at].clone();
    let len = cell.len();
    heap_orders(&mut cell, len, &mut |order| {
        let len = placed.len();
        placed.extend_from_slice(order);
        permute_cells(cells, at + 1, placed, adj, best);
        placed.truncate(len);
    });
}

/// Heap's algorithm over `items[..k]`.
fn heap_orders(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_orders(items, k - 1, visit);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_orders(items, k - 1, visit);
}
