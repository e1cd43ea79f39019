mod common;

use colorcode::check::{check_cluster, check_p_partite, ClusterShape};
use colorcode::cluster::{
    cluster_editing, cluster_editing_free_l, many_cluster_editing, multipartite_cluster_editing, p_partite_editing,
};
use colorcode::oracle::ClusterProfile;
use colorcode::{Graph, SolveOptions};

fn opts() -> SolveOptions {
    SolveOptions::default()
}

#[test]
fn witnesses_recount_and_monotone_in_k() {
    for g in common::sample(17, 7, 80).into_iter().chain(common::sample(18, 8, 20)) {
        let mut last = [false; 4];
        for k in 0..=3 {
            for l in 1..=3 {
                let a = cluster_editing(&g, k, l, &opts()).unwrap();
                let b = cluster_editing_free_l(&g, k, l, &opts()).unwrap();
                assert_eq!(a.found(), b.found());
                for w in [a.witness, b.witness].into_iter().flatten() {
                    assert!(check_cluster(
                        &g,
                        &w.edits.additions,
                        &w.edits.deletions,
                        &w.clusters,
                        &ClusterShape::Cliques(Some(l)),
                        k
                    ));
                    assert_eq!(w.edits.apply(&g).unwrap().components().len(), l);
                }
                let p = p_partite_editing(&g, k, l, l % 2 == 0, &opts()).unwrap();
                if let Some(e) = &p.witness {
                    assert!(check_p_partite(&g, &e.additions, &e.deletions, l, k));
                }
                let found = p.found();
                assert!(!last[l] || found, "p-partite not monotone in k");
                last[l] = found;
            }
            let m = many_cluster_editing(&g, k, &opts()).unwrap();
            if let Some(w) = m.witness {
                assert!(check_cluster(
                    &g,
                    &w.edits.additions,
                    &w.edits.deletions,
                    &w.clusters,
                    &ClusterShape::Cliques(None),
                    k
                ));
            }
            for parts in [vec![2], vec![1, 2], vec![2, 3]] {
                let s = multipartite_cluster_editing(&g, k, &parts, &opts()).unwrap();
                if let Some(w) = s.witness {
                    assert!(check_cluster(
                        &g,
                        &w.edits.additions,
                        &w.edits.deletions,
                        &w.clusters,
                        &ClusterShape::Multipartite(parts),
                        k
                    ));
                }
            }
        }
    }
}

#[test]
fn eight_vertex_samples_match_oracle() {
    for g in common::sample(19, 8, 40) {
        let profile = ClusterProfile::new(&g, 2).unwrap();
        for k in 0..=2 {
            for l in 1..=3 {
                assert_eq!(cluster_editing(&g, k, l, &opts()).unwrap().found(), profile.cliques(Some(l), k).is_some());
            }
            assert_eq!(many_cluster_editing(&g, k, &opts()).unwrap().found(), profile.cliques(None, k).is_some());
        }
    }
}

#[test]
fn set_aside_cliques() {
    let g = Graph::disjoint_union(&[Graph::path(3), Graph::complete(5)]).unwrap();
    let w = cluster_editing_free_l(&g, 1, 2, &opts()).unwrap().witness.unwrap();
    assert_eq!(w.edits.additions, vec![(0, 2)]);
    assert!(w.edits.deletions.is_empty());
    assert!(!cluster_editing_free_l(&Graph::complete(3), 0, 2, &opts()).unwrap().found());
    let many = Graph::disjoint_union(&vec![Graph::complete(2); 6]).unwrap();
    let w = many_cluster_editing(&many, 1, &opts()).unwrap().witness.unwrap();
    assert_eq!((w.edits.cost(), w.clusters.len()), (0, 6));
}

#[test]
fn multipartite_examples() {
    let g = Graph::disjoint_union(&[Graph::cycle(4), Graph::complete(3)]).unwrap();
    let w = multipartite_cluster_editing(&g, 0, &[2, 3], &opts()).unwrap().witness.unwrap();
    assert_eq!(w.edits.cost(), 0);
    let w = multipartite_cluster_editing(&Graph::path(4), 1, &[2], &opts()).unwrap().witness.unwrap();
    assert_eq!(w.edits.additions, vec![(0, 3)]);
    assert!(!multipartite_cluster_editing(&Graph::complete(3), 0, &[2], &opts()).unwrap().found());
}
