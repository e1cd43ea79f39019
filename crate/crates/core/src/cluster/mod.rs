//! Cluster editing and its relatives.
//!
//! A coloring is read as blue (color 1) and orange (color 2). For a
//! solution with edit endpoints `M`, a useful coloring paints `M` blue and
//! at least one untouched vertex of every cluster that contains one orange.
//! The smallest orange vertex `d` of such a cluster sees exactly its
//! cluster, so the closed neighborhoods of orange vertices without a smaller
//! orange neighbor identify these clusters directly. At most `2k` vertices
//! remain, and those are partitioned by brute force.

mod multipartite;

pub use multipartite::multipartite_cluster_editing;

use crate::error::{domain, Result};
use crate::graph::{complement, Graph, Vertex};
use crate::runner::{no_work, search_members, Schedule, SolveOptions, SolveStats, Solved};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EditSet {
    /// Pairs `(u, v)`, `u < v`, that are not edges of the input.
    pub additions: Vec<(Vertex, Vertex)>,
    /// Input edges to remove.
    pub deletions: Vec<(Vertex, Vertex)>,
}

impl EditSet {
    pub fn cost(&self) -> usize {
        self.additions.len() + self.deletions.len()
    }

    /// The input graph with the edits applied.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        let del: std::collections::HashSet<(Vertex, Vertex)> = self.deletions.iter().copied().collect();
        let edges = g.edges().iter().copied().filter(|e| !del.contains(e)).chain(self.additions.iter().copied());
        Graph::new(g.vertex_count(), false, edges)
    }

    /// Edits turning `g` into the disjoint union of cliques on `clusters`.
    pub fn for_cliques(g: &Graph, clusters: &[Vec<Vertex>]) -> Self {
        let owner = owners(g.vertex_count(), clusters);
        let mut edits = EditSet::default();
        for c in clusters {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    if !g.has_edge(u, v) {
                        edits.additions.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
        edits.deletions = g.edges().iter().copied().filter(|&(u, v)| owner[u] != owner[v]).collect();
        edits.normalize();
        edits
    }

    fn normalize(&mut self) {
        self.additions.sort_unstable();
        self.deletions.sort_unstable();
    }

    fn mapped(&self, map: &[Vertex]) -> Self {
        let f = |&(u, v): &(Vertex, Vertex)| (map[u].min(map[v]), map[u].max(map[v]));
        let mut e = EditSet {
            additions: self.additions.iter().map(f).collect(),
            deletions: self.deletions.iter().map(f).collect(),
        };
        e.normalize();
        e
    }

    fn extend(&mut self, other: &EditSet) {
        self.additions.extend_from_slice(&other.additions);
        self.deletions.extend_from_slice(&other.deletions);
        self.normalize();
    }
}

fn owners(n: usize, clusters: &[Vec<Vertex>]) -> Vec<usize> {
    let mut owner = vec![usize::MAX; n];
    for (i, c) in clusters.iter().enumerate() {
        for &v in c {
            owner[v] = i;
        }
    }
    owner
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterSolution {
    pub edits: EditSet,
    /// The components after editing.
    pub clusters: Vec<Vec<Vertex>>,
}

impl ClusterSolution {
    fn cliques(g: &Graph, mut clusters: Vec<Vec<Vertex>>) -> Self {
        for c in &mut clusters {
            c.sort_unstable();
        }
        clusters.sort();
        ClusterSolution { edits: EditSet::for_cliques(g, &clusters), clusters }
    }
}

/// Dense adjacency for the per-coloring work.
pub(crate) struct Adj {
    n: usize,
    bits: Vec<bool>,
}

impl Adj {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut bits = vec![false; n * n];
        for &(u, v) in g.edges() {
            bits[u * n + v] = true;
            bits[v * n + u] = true;
        }
        Adj { n, bits }
    }

    pub(crate) fn has(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.n + v]
    }
}

pub(crate) fn undirected_only(g: &Graph) -> Result<()> {
    if g.is_directed() {
        return Err(domain("cluster editing is defined on undirected graphs"));
    }
    Ok(())
}

const ORANGE: u8 = 2;

/// Exactly `l` cliques using at most `k` edits.
pub fn cluster_editing(g: &Graph, k: usize, l: usize, opts: &SolveOptions) -> Result<Solved<ClusterSolution>> {
    undirected_only(g)?;
    if l == 0 {
        return Err(domain("cluster count must be at least 1"));
    }
    let n = g.vertex_count();
    if l > n {
        return Ok(Solved::none(no_work()));
    }
    let adj = Adj::new(g);
    let mut schedule = Schedule::new(opts.engine, n, 2 * k + l, 2, opts.multiplier)?;
    let (hit, stats) = search_members(&mut schedule, opts.exec, |col| clique_clusters(&adj, col, k, l));
    Ok(Solved { witness: hit.map(|h| ClusterSolution::cliques(g, h.value)), stats })
}

fn clique_clusters(adj: &Adj, col: &[u8], k: usize, l: usize) -> Option<Vec<Vec<Vertex>>> {
    let n = adj.n;
    let reps: Vec<Vertex> =
        (0..n).filter(|&d| col[d] == ORANGE && !(0..d).any(|u| col[u] == ORANGE && adj.has(u, d))).collect();
    if reps.len() > l {
        return None;
    }
    let mut owner = vec![usize::MAX; n];
    let mut clusters = Vec::with_capacity(l);
    for (i, &d) in reps.iter().enumerate() {
        let members: Vec<Vertex> = (0..n).filter(|&v| v == d || adj.has(d, v)).collect();
        for &v in &members {
            if owner[v] != usize::MAX {
                return None;
            }
            owner[v] = i;
        }
        clusters.push(members);
    }
    let left: Vec<Vertex> = (0..n).filter(|&v| owner[v] == usize::MAX).collect();
    let q = l - reps.len();
    if left.len() > 2 * k || left.len() < q || (q == 0 && !left.is_empty()) {
        return None;
    }
    let mut fixed = 0;
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (owner[u], owner[v]);
            let counted = match (a == usize::MAX, b == usize::MAX) {
                (false, false) => (a == b) != adj.has(u, v),
                (true, true) => false,
                _ => adj.has(u, v),
            };
            fixed += usize::from(counted);
        }
    }
    if fixed > k {
        return None;
    }
    let (_, blocks) = best_partition(adj, &left, q, k - fixed)?;
    clusters.extend(blocks);
    Some(clusters)
}

/// The cheapest split of `items` into exactly `q` cliques, counting
/// additions inside blocks and deletions between blocks, if it costs at
/// most `budget`. Ties go to the first partition in enumeration order.
pub(crate) fn best_partition(
    adj: &Adj,
    items: &[Vertex],
    q: usize,
    budget: usize,
) -> Option<(usize, Vec<Vec<Vertex>>)> {
    fn rec(
        adj: &Adj,
        items: &[Vertex],
        q: usize,
        budget: usize,
        blocks: &mut Vec<Vec<Vertex>>,
        cost: usize,
        best: &mut Option<(usize, Vec<Vec<Vertex>>)>,
    ) {
        if cost > budget || best.as_ref().is_some_and(|b| cost >= b.0) {
            return;
        }
        let placed: usize = blocks.iter().map(Vec::len).sum();
        if placed == items.len() {
            if blocks.len() == q {
                *best = Some((cost, blocks.clone()));
            }
            return;
        }
        if blocks.len() + (items.len() - placed) < q {
            return;
        }
        let v = items[placed];
        let links: Vec<usize> = blocks.iter().map(|b| b.iter().filter(|&&u| adj.has(u, v)).count()).collect();
        let total: usize = links.iter().sum();
        for i in 0..blocks.len() {
            let add = blocks[i].len() - links[i];
            let del = total - links[i];
            blocks[i].push(v);
            rec(adj, items, q, budget, blocks, cost + add + del, best);
            blocks[i].pop();
        }
        if blocks.len() < q {
            blocks.push(vec![v]);
            rec(adj, items, q, budget, blocks, cost + total, best);
            blocks.pop();
        }
    }
    let mut best = None;
    rec(adj, items, q, budget, &mut Vec::new(), 0, &mut best);
    best
}

/// Vertices whose component is a clique: `N[v]` is a clique and every
/// neighbor has the same closed neighborhood.
fn in_clique_component(g: &Graph, v: Vertex) -> bool {
    let closed = |x: Vertex| {
        let mut c = g.neighbors(x).to_vec();
        c.insert(c.binary_search(&x).unwrap_err(), x);
        c
    };
    let mine = closed(v);
    g.neighbors(v).iter().all(|&w| closed(w) == mine)
}

/// Components that are cliques, and the vertices of all other components.
fn split_clique_components(g: &Graph) -> (Vec<Vec<Vertex>>, Vec<Vec<Vertex>>) {
    g.components().into_iter().partition(|c| in_clique_component(g, c[0]))
}

/// Solves `cluster_editing` on the subgraph induced by `rest` and adds the
/// untouched `aside` cliques to the solution.
fn solve_rest(
    g: &Graph,
    aside: Vec<Vec<Vertex>>,
    rest: &[Vertex],
    k: usize,
    targets: impl IntoIterator<Item = usize>,
    opts: &SolveOptions,
) -> Result<Solved<ClusterSolution>> {
    if rest.is_empty() {
        return Ok(Solved { witness: Some(ClusterSolution::cliques(g, aside)), stats: no_work() });
    }
    let (sub, map) = g.induced(rest);
    let mut stats = SolveStats::default();
    for l in targets {
        let solved = cluster_editing(&sub, k, l, opts)?;
        stats.absorb(&solved.stats);
        if let Some(sol) = solved.witness {
            let mut clusters = aside;
            clusters.extend(sol.clusters.iter().map(|c| c.iter().map(|&v| map[v]).collect()));
            return Ok(Solved { witness: Some(ClusterSolution::cliques(g, clusters)), stats });
        }
    }
    Ok(Solved::none(stats))
}

/// Any number of cliques using at most `k` edits.
pub fn many_cluster_editing(g: &Graph, k: usize, opts: &SolveOptions) -> Result<Solved<ClusterSolution>> {
    undirected_only(g)?;
    let (aside, rest) = split_clique_components(g);
    let rest: Vec<Vertex> = rest.concat();
    let most = (2 * k).min(rest.len());
    solve_rest(g, aside, &rest, k, 1..=most, opts)
}

/// Largest number of clusters the remainder can need in
/// [`cluster_editing_free_l`]: at most `2k` clusters contain an edited
/// vertex, and at most `2k` untouched cliques of each size up to `k + 1`
/// are kept.
pub fn free_l_bound(k: usize) -> usize {
    2 * k + 2 * k * (k + 1)
}

/// Exactly `l` cliques using at most `k` edits, where `l` is not bounded by
/// the parameter.
pub fn cluster_editing_free_l(g: &Graph, k: usize, l: usize, opts: &SolveOptions) -> Result<Solved<ClusterSolution>> {
    undirected_only(g)?;
    if l == 0 {
        return Err(domain("cluster count must be at least 1"));
    }
    let (cliques, others) = split_clique_components(g);
    let mut aside = Vec::new();
    let mut rest: Vec<Vertex> = others.concat();
    let mut kept_of_size = std::collections::HashMap::new();
    for c in cliques {
        let kept = kept_of_size.entry(c.len()).or_insert(0usize);
        if c.len() > k + 1 || *kept >= 2 * k {
            aside.push(c);
        } else {
            *kept += 1;
            rest.extend_from_slice(&c);
        }
    }
    let x = aside.len();
    if x > l {
        return Ok(Solved::none(no_work()));
    }
    let target = l - x;
    if rest.is_empty() {
        return if target == 0 { solve_rest(g, aside, &rest, k, [], opts) } else { Ok(Solved::none(no_work())) };
    }
    if target == 0 || target > free_l_bound(k) {
        return Ok(Solved::none(no_work()));
    }
    rest.sort_unstable();
    solve_rest(g, aside, &rest, k, [target], opts)
}

/// Solution of a complete `p`-partite editing problem: the edits and the
/// parts.
pub(crate) fn p_partite_solution(
    g: &Graph,
    k: usize,
    p: usize,
    p_is_parameter: bool,
    opts: &SolveOptions,
) -> Result<Solved<ClusterSolution>> {
    undirected_only(g)?;
    if p == 0 {
        return Err(domain("part count must be at least 1"));
    }
    let co = complement(g)?;
    let solved =
        if p_is_parameter { cluster_editing(&co, k, p, opts)? } else { cluster_editing_free_l(&co, k, p, opts)? };
    Ok(solved.map(|sol| ClusterSolution {
        edits: EditSet { additions: sol.edits.deletions, deletions: sol.edits.additions },
        clusters: sol.clusters,
    }))
}

/// Edits turning `g` into a complete `p`-partite graph, solved as cluster
/// editing on the complement.
pub fn p_partite_editing(
    g: &Graph,
    k: usize,
    p: usize,
    p_is_parameter: bool,
    opts: &SolveOptions,
) -> Result<Solved<EditSet>> {
    Ok(p_partite_solution(g, k, p, p_is_parameter, opts)?.map(|s| s.edits))
}
