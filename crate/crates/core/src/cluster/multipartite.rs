//! Editing into a disjoint union of complete multipartite graphs.
//!
//! Two orange vertices are equivalent when they are adjacent or share the
//! same non-empty neighborhood. Each class, together with its neighbors,
//! lies inside one cluster; every vertex not reached this way is an edit
//! endpoint, and all ways of distributing those (at most `2k`) vertices
//! over the clusters are tried.

use std::collections::HashMap;
use std::sync::Mutex;

use super::{owners, p_partite_solution, undirected_only, Adj, ClusterSolution, EditSet, ORANGE};
use crate::error::{domain, Result};
use crate::graph::{Graph, Vertex};
use crate::runner::{no_work, search_members, Exec, Schedule, SolveOptions, Solved};

type Memo = Mutex<HashMap<(Vec<Vertex>, usize), Option<(usize, EditSet)>>>;

/// Components `C_1..C_l` with `C_i` complete `parts[i]`-partite, using at
/// most `k` edits. Clusters in the witness follow the order of `parts`.
pub fn multipartite_cluster_editing(
    g: &Graph,
    k: usize,
    parts: &[usize],
    opts: &SolveOptions,
) -> Result<Solved<ClusterSolution>> {
    undirected_only(g)?;
    if parts.is_empty() || parts.contains(&0) {
        return Err(domain("parts must be a non-empty list of positive integers"));
    }
    let n = g.vertex_count();
    if parts.iter().sum::<usize>() > n {
        return Ok(Solved::none(no_work()));
    }
    let search = Search {
        g,
        adj: Adj::new(g),
        k,
        parts,
        memo: Mutex::new(HashMap::new()),
        inner: opts.with_exec(Exec::Sequential),
    };
    let mut schedule = Schedule::new(opts.engine, n, 2 * k + parts.len(), 2, opts.multiplier)?;
    let (hit, stats) = search_members(&mut schedule, opts.exec, |col| search.coloring(col));
    Ok(Solved { witness: hit.map(|h| h.value), stats })
}

struct Search<'a> {
    g: &'a Graph,
    adj: Adj,
    k: usize,
    parts: &'a [usize],
    memo: Memo,
    inner: SolveOptions,
}

impl Search<'_> {
    fn coloring(&self, col: &[u8]) -> Option<ClusterSolution> {
        let n = self.g.vertex_count();
        let l = self.parts.len();
        let classes = self.classes(col);
        if classes.len() > l {
            return None;
        }
        let mut owner = vec![usize::MAX; n];
        let mut identified = Vec::with_capacity(classes.len());
        for (i, class) in classes.iter().enumerate() {
            let mut members = class.clone();
            for &v in class {
                members.extend_from_slice(self.g.neighbors(v));
            }
            members.sort_unstable();
            members.dedup();
            for &v in &members {
                if owner[v] != usize::MAX && owner[v] != i {
                    return None;
                }
                owner[v] = i;
            }
            identified.push(members);
        }
        let left: Vec<Vertex> = (0..n).filter(|&v| owner[v] == usize::MAX).collect();
        if left.len() > 2 * self.k {
            return None;
        }
        let mut slots = vec![usize::MAX; identified.len()];
        let mut used = vec![false; l];
        self.assign_classes(&identified, &left, 0, &mut slots, &mut used)
    }

    /// Orange equivalence classes, ordered by smallest member.
    fn classes(&self, col: &[u8]) -> Vec<Vec<Vertex>> {
        let orange: Vec<Vertex> = (0..col.len()).filter(|&v| col[v] == ORANGE).collect();
        let mut parent: Vec<usize> = (0..orange.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for i in 0..orange.len() {
            for j in i + 1..orange.len() {
                let (u, v) = (orange[i], orange[j]);
                let same = !self.g.neighbors(u).is_empty() && self.g.neighbors(u) == self.g.neighbors(v);
                if self.adj.has(u, v) || same {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<Vertex>> = Vec::new();
        let mut index = HashMap::new();
        for i in 0..orange.len() {
            let r = find(&mut parent, i);
            let slot = *index.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[slot].push(orange[i]);
        }
        groups
    }

    fn assign_classes(
        &self,
        identified: &[Vec<Vertex>],
        left: &[Vertex],
        next: usize,
        slots: &mut [usize],
        used: &mut [bool],
    ) -> Option<ClusterSolution> {
        if next == identified.len() {
            let mut clusters = vec![Vec::new(); self.parts.len()];
            for (c, &s) in identified.iter().zip(slots.iter()) {
                clusters[s] = c.clone();
            }
            return self.place_leftover(left, 0, &mut clusters);
        }
        for s in 0..self.parts.len() {
            if !used[s] {
                used[s] = true;
                slots[next] = s;
                let found = self.assign_classes(identified, left, next + 1, slots, used);
                used[s] = false;
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    fn place_leftover(&self, left: &[Vertex], next: usize, clusters: &mut Vec<Vec<Vertex>>) -> Option<ClusterSolution> {
        if next == left.len() {
            return self.evaluate(clusters);
        }
        for s in 0..clusters.len() {
            clusters[s].push(left[next]);
            let found = self.place_leftover(left, next + 1, clusters);
            clusters[s].pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn evaluate(&self, clusters: &[Vec<Vertex>]) -> Option<ClusterSolution> {
        if clusters.iter().zip(self.parts).any(|(c, &p)| c.len() < p) {
            return None;
        }
        let mut sorted: Vec<Vec<Vertex>> = clusters.to_vec();
        for c in &mut sorted {
            c.sort_unstable();
        }
        let owner = owners(self.g.vertex_count(), &sorted);
        let between: Vec<(Vertex, Vertex)> =
            self.g.edges().iter().copied().filter(|&(u, v)| owner[u] != owner[v]).collect();
        let mut budget = self.k.checked_sub(between.len())?;
        let mut edits = EditSet { additions: Vec::new(), deletions: between };
        for (c, &p) in sorted.iter().zip(self.parts) {
            let (cost, inside) = self.cluster_cost(c, p)?;
            budget = budget.checked_sub(cost)?;
            edits.extend(&inside);
        }
        Some(ClusterSolution { edits, clusters: sorted })
    }

    /// Cheapest edits (at most `k`) making `G[c]` complete `p`-partite.
    fn cluster_cost(&self, c: &[Vertex], p: usize) -> Option<(usize, EditSet)> {
        let key = (c.to_vec(), p);
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let value = if p == 1 {
            (c.len() == 1).then(|| (0, EditSet::default()))
        } else {
            let (sub, map) = self.g.induced(c);
            (0..=self.k).find_map(|b| {
                let solved = p_partite_solution(&sub, b, p, true, &self.inner).ok()?;
                solved.witness.map(|s| (s.edits.cost(), s.edits.mapped(&map)))
            })
        };
        self.memo.lock().expect("memo lock").insert(key, value.clone());
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SolveOptions {
        SolveOptions::default()
    }

    #[test]
    fn examples() {
        let g = Graph::disjoint_union(&[Graph::cycle(4), Graph::complete(3)]).unwrap();
        let w = multipartite_cluster_editing(&g, 0, &[2, 3], &opts()).unwrap().witness.unwrap();
        assert_eq!(w.edits.cost(), 0);
        assert_eq!(w.clusters, vec![vec![0, 1, 2, 3], vec![4, 5, 6]]);

        let w = multipartite_cluster_editing(&Graph::path(4), 1, &[2], &opts()).unwrap().witness.unwrap();
        assert_eq!(w.edits.additions, vec![(0, 3)]);

        assert!(!multipartite_cluster_editing(&Graph::complete(3), 0, &[2], &opts()).unwrap().found());
    }

    #[test]
    fn singleton_parts() {
        let g = Graph::empty(2);
        assert!(multipartite_cluster_editing(&g, 0, &[1, 1], &opts()).unwrap().found());
        assert!(!multipartite_cluster_editing(&g, 0, &[1], &opts()).unwrap().found());
        assert!(!multipartite_cluster_editing(&g, 0, &[2], &opts()).unwrap().found());
        assert!(multipartite_cluster_editing(&g, 1, &[2], &opts()).unwrap().found());
    }
}
