//! Witness checkers. They recompute everything from the input graph and
//! share no code with the solvers beyond the graph type, so both the
//! solvers and the brute-force oracle are held to the same standard.

use std::collections::{BTreeSet, HashSet};

use crate::graph::{Graph, Vertex};

/// `assignment` is injective, maps every pattern edge (arc) onto a host
/// edge (arc) and honors every anchor `(pattern vertex, host vertex)`.
pub fn check_embedding(h: &Graph, g: &Graph, anchors: &[(Vertex, Vertex)], assignment: &[Vertex]) -> bool {
    if assignment.len() != h.vertex_count() || assignment.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let distinct: HashSet<Vertex> = assignment.iter().copied().collect();
    distinct.len() == assignment.len()
        && h.edges().iter().all(|&(u, v)| {
            let (a, b) = (assignment[u], assignment[v]);
            if g.is_directed() {
                g.edges().binary_search(&(a, b)).is_ok()
            } else {
                g.edges().binary_search(&(a.min(b), a.max(b))).is_ok()
            }
        })
        && anchors.iter().all(|&(p, v)| assignment.get(p) == Some(&v))
}

/// Each copy embeds its component and no host vertex is used twice.
pub fn check_packing(g: &Graph, components: &[Graph], copies: &[Vec<Vertex>]) -> bool {
    if components.len() != copies.len() {
        return false;
    }
    let mut used = HashSet::new();
    components.iter().zip(copies).all(|(h, c)| check_embedding(h, g, &[], c) && c.iter().all(|&v| used.insert(v)))
}

/// A simple path (respecting arc directions) from `s` to `t` with at most
/// `d` edges.
pub fn check_path(g: &Graph, path: &[Vertex], s: Vertex, t: Vertex, d: usize) -> bool {
    let h = Graph::path(path.len());
    let h = if g.is_directed() { h.oriented() } else { h };
    !path.is_empty()
        && path[0] == s
        && path[path.len() - 1] == t
        && path.len() - 1 <= d
        && check_embedding(&h, g, &[], path)
}

/// `k` pairwise vertex-disjoint host edges.
pub fn check_matching(g: &Graph, edges: &[(Vertex, Vertex)], k: usize) -> bool {
    let mut used = HashSet::new();
    edges.len() == k
        && edges.iter().all(|&(u, v)| {
            let present = g.edges().binary_search(&(u, v)).is_ok()
                || (!g.is_directed() && g.edges().binary_search(&(v, u)).is_ok());
            present && used.insert(u) && used.insert(v)
        })
}

/// What a cover witness has to achieve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverGoal {
    /// At most `k` vertices covering every edge.
    All { k: usize },
    /// At most `k` vertices covering at least `t` edges.
    AtLeast { k: usize, t: usize },
    /// Any number of vertices covering exactly `t` edges.
    Exactly { t: usize },
}

/// Recounts the edges covered by `vertices`, compares them with the listed
/// `covered` edges and checks the goal.
pub fn check_cover(g: &Graph, vertices: &[Vertex], covered: &[(Vertex, Vertex)], goal: CoverGoal) -> bool {
    let set: BTreeSet<Vertex> = vertices.iter().copied().collect();
    if set.len() != vertices.len() || set.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let actual: BTreeSet<(Vertex, Vertex)> =
        g.edges().iter().copied().filter(|(u, v)| set.contains(u) || set.contains(v)).collect();
    let listed: BTreeSet<(Vertex, Vertex)> = covered.iter().copied().collect();
    if actual != listed || listed.len() != covered.len() {
        return false;
    }
    let m = actual.len();
    match goal {
        CoverGoal::All { k } => set.len() <= k && m == g.edge_count(),
        CoverGoal::AtLeast { k, t } => set.len() <= k && m >= t,
        CoverGoal::Exactly { t } => m == t,
    }
}

/// Target shape of an edited graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClusterShape {
    /// Disjoint cliques; `Some(l)` fixes their number.
    Cliques(Option<usize>),
    /// Components complete `parts[i]`-partite, listed in `parts` order.
    Multipartite(Vec<usize>),
}

/// Number of parts if `g` is complete multipartite (non-adjacency is an
/// equivalence relation), counting an edgeless graph as one part.
pub fn multipartite_parts(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let adj = |u: Vertex, v: Vertex| g.edges().binary_search(&(u.min(v), u.max(v))).is_ok();
    let mut part = vec![usize::MAX; n];
    let mut parts = 0;
    for v in 0..n {
        if part[v] != usize::MAX {
            continue;
        }
        for w in v..n {
            if w == v || !adj(v, w) {
                if part[w] != usize::MAX {
                    return None;
                }
                part[w] = parts;
            }
        }
        parts += 1;
    }
    for u in 0..n {
        for v in u + 1..n {
            if (part[u] == part[v]) == adj(u, v) {
                return None;
            }
        }
    }
    Some(parts)
}

fn edits_valid(g: &Graph, additions: &[(Vertex, Vertex)], deletions: &[(Vertex, Vertex)]) -> Option<Graph> {
    let n = g.vertex_count();
    let ok_pair = |&(u, v): &(Vertex, Vertex)| u < v && v < n;
    if !additions.iter().all(ok_pair) || !deletions.iter().all(ok_pair) {
        return None;
    }
    let add: BTreeSet<_> = additions.iter().copied().collect();
    let del: BTreeSet<_> = deletions.iter().copied().collect();
    let edges: BTreeSet<_> = g.edges().iter().copied().collect();
    if add.len() != additions.len() || del.len() != deletions.len() {
        return None;
    }
    if add.iter().any(|e| edges.contains(e)) || del.iter().any(|e| !edges.contains(e)) {
        return None;
    }
    let result: Vec<_> = edges.difference(&del).copied().chain(add.iter().copied()).collect();
    Graph::new(n, false, result).ok()
}

/// Applying the edits (at most `k` of them) yields exactly `clusters` as
/// components, each of the requested shape.
pub fn check_cluster(
    g: &Graph,
    additions: &[(Vertex, Vertex)],
    deletions: &[(Vertex, Vertex)],
    clusters: &[Vec<Vertex>],
    shape: &ClusterShape,
    k: usize,
) -> bool {
    if additions.len() + deletions.len() > k {
        return false;
    }
    let Some(edited) = edits_valid(g, additions, deletions) else {
        return false;
    };
    let comps: BTreeSet<BTreeSet<Vertex>> = edited.components().into_iter().map(|c| c.into_iter().collect()).collect();
    let claimed: BTreeSet<BTreeSet<Vertex>> = clusters.iter().map(|c| c.iter().copied().collect()).collect();
    if comps != claimed || claimed.len() != clusters.len() {
        return false;
    }
    match shape {
        ClusterShape::Cliques(l) => {
            l.is_none_or(|l| l == clusters.len())
                && clusters.iter().all(|c| {
                    let (sub, _) = edited.induced(c);
                    sub.edge_count() == c.len() * (c.len() - 1) / 2
                })
        }
        ClusterShape::Multipartite(parts) => {
            parts.len() == clusters.len()
                && clusters.iter().zip(parts).all(|(c, &p)| multipartite_parts(&edited.induced(c).0) == Some(p))
        }
    }
}

/// Applying the edits (at most `k`) makes `g` complete `p`-partite.
pub fn check_p_partite(
    g: &Graph,
    additions: &[(Vertex, Vertex)],
    deletions: &[(Vertex, Vertex)],
    p: usize,
    k: usize,
) -> bool {
    additions.len() + deletions.len() <= k
        && edits_valid(g, additions, deletions).is_some_and(|e| multipartite_parts(&e) == Some(p))
}

/// Which size condition a cut has to meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutMode {
    /// `X` connected with exactly `l` vertices.
    Connected,
    /// `1 < |X| <= l`.
    AtMost,
}

#[allow(clippy::too_many_arguments)]
pub fn check_cut(
    g: &Graph,
    x: &[Vertex],
    s: &[Vertex],
    y: &[Vertex],
    k: usize,
    l: usize,
    mode: CutMode,
    terminal: Option<Vertex>,
) -> bool {
    let n = g.vertex_count();
    let mut side = vec![0u8; n];
    for (set, tag) in [(x, 1u8), (s, 2), (y, 3)] {
        for &v in set {
            if v >= n || side[v] != 0 {
                return false;
            }
            side[v] = tag;
        }
    }
    if side.contains(&0) || s.len() > k {
        return false;
    }
    let separated = g.edges().iter().all(|&(u, v)| !matches!((side[u], side[v]), (1, 3) | (3, 1)));
    let sized = match mode {
        CutMode::Connected => x.len() == l && g.induced(x).0.components().len() == 1,
        CutMode::AtMost => x.len() > 1 && x.len() <= l,
    };
    separated && sized && terminal.is_none_or(|t| x.contains(&t))
}

/// `k` distinct centers with pairwise distance above `2r`, each of whose
/// `r`-balls satisfies `pred`.
pub fn check_balls(g: &Graph, centers: &[Vertex], k: usize, r: usize, pred: &dyn Fn(&Graph, Vertex) -> bool) -> bool {
    if centers.len() != k || centers.iter().any(|&c| c >= g.vertex_count()) {
        return false;
    }
    for (i, &a) in centers.iter().enumerate() {
        let dist = g.distances(a);
        if centers[i + 1..].iter().any(|&b| dist[b].is_some_and(|d| d <= 2 * r)) {
            return false;
        }
        let inside: Vec<Vertex> = (0..g.vertex_count()).filter(|&v| dist[v].is_some_and(|d| d <= r)).collect();
        let (ball, map) = g.induced(&inside);
        let idx = map.iter().position(|&v| v == a).expect("center in ball");
        if !pred(&ball, idx) {
            return false;
        }
    }
    true
}
