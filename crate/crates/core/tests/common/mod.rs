#![allow(dead_code)]

use colorcode::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::undirected(n, &edges).unwrap()
}

/// Random digraph without antiparallel pairs.
pub fn random_digraph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    Graph::directed(n, &arcs).unwrap()
}

/// `count` random graphs on `n` vertices with densities spread over
/// `[0.15, 0.85]`.
pub fn sample(seed: u64, n: usize, count: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let p = 0.15 + 0.7 * (i % 8) as f64 / 7.0;
            random_graph(&mut r, n, p)
        })
        .collect()
}
