//! Scattered balls: `k` centers whose radius-`r` balls are pairwise
//! disjoint and each satisfy a local predicate.
//!
//! In a graph of maximum degree `delta` an `r`-ball has at most `M` vertices,
//! so the union of `k` witness balls has at most `M * k` vertices. Some
//! member of an `(n, M*k, k+1)` coloring family paints ball `i` entirely in
//! color `i`; the search then only has to find, per color, one center whose
//! ball is monochromatic in that color.

use std::collections::VecDeque;

use crate::error::{domain, Result};
use crate::graph::{ball, Graph, Vertex};
use crate::runner::{search_members, Schedule, SolveOptions, Solved};

/// A predicate on a ball: the induced ball graph and the index of the
/// center inside it.
pub type BallPredicate<'a> = dyn Fn(&Graph, Vertex) -> bool + Sync + 'a;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallsWitness {
    pub centers: Vec<Vertex>,
    pub radius: usize,
}

/// Upper bound on the size of an `r`-ball when every degree is at most
/// `delta`.
pub fn ball_size_bound(delta: usize, r: usize) -> usize {
    match delta {
        0 | 1 => 2,
        2 => 2 * r + 1,
        _ => {
            let mut total = 1usize;
            let mut layer = delta;
            for _ in 0..r {
                total = total.saturating_add(layer);
                layer = layer.saturating_mul(delta - 1);
            }
            total
        }
    }
}

/// Coloring family parameters `(n, subset size, colors)` used for a search.
pub fn family_shape(g: &Graph, k: usize, r: usize) -> (usize, usize, usize) {
    let m = ball_size_bound(g.max_degree(), r);
    (g.vertex_count(), m.saturating_mul(k), k + 1)
}

pub fn scattered_balls(
    g: &Graph,
    k: usize,
    r: usize,
    pred: &BallPredicate<'_>,
    opts: &SolveOptions,
) -> Result<Solved<BallsWitness>> {
    if k == 0 {
        return Err(domain("k must be at least 1"));
    }
    if g.is_directed() {
        return Err(domain("scattered balls are defined on undirected graphs"));
    }
    let (n, size, colors) = family_shape(g, k, r);
    if n == 0 {
        return Ok(Solved::none(crate::runner::no_work()));
    }
    let mut schedule = Schedule::new(opts.engine, n, size, colors, opts.multiplier)?;
    let (hit, stats) = search_members(&mut schedule, opts.exec, |col| {
        (1..=k as u8)
            .map(|i| (0..n).find(|&v| col[v] == i && monochromatic_ball(g, col, v, r) && holds(g, v, r, pred)))
            .collect::<Option<Vec<Vertex>>>()
    });
    Ok(Solved { witness: hit.map(|h| BallsWitness { centers: h.value, radius: r }), stats })
}

/// Whether every vertex within distance `r` of `center` has the center's
/// color. Exploration stays inside the color class; a neighbor of another
/// color at depth below `r` ends it.
fn monochromatic_ball(g: &Graph, colors: &[u8], center: Vertex, r: usize) -> bool {
    let want = colors[center];
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[center] = 0;
    let mut queue = VecDeque::from([center]);
    while let Some(u) = queue.pop_front() {
        if dist[u] == r {
            continue;
        }
        for &w in g.neighbors(u) {
            if colors[w] != want {
                return false;
            }
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    true
}

fn holds(g: &Graph, center: Vertex, r: usize, pred: &BallPredicate<'_>) -> bool {
    let (b, map) = ball(g, center, r).expect("center is a vertex");
    let idx = map.iter().position(|&v| v == center).expect("center lies in its ball");
    pred(&b, idx)
}
