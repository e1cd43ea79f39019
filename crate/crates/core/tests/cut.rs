mod common;

use colorcode::check::{check_cut, CutMode};
use colorcode::cut::{cut_at_most, cut_connected};
use colorcode::oracle;
use colorcode::{Graph, SolveOptions};

fn compare(g: &Graph) {
    let n = g.vertex_count();
    let opts = SolveOptions::default();
    for k in 0..=3 {
        for l in 1..=3 {
            for terminal in [None, Some(0), Some(n - 1)] {
                let got = cut_connected(g, k, l, terminal, &opts).unwrap();
                assert_eq!(got.found(), oracle::cut(g, k, l, terminal, true).unwrap().is_some());
                if let Some(w) = got.witness {
                    assert!(check_cut(g, &w.x, &w.s, &w.y, k, l, CutMode::Connected, terminal));
                }
                if l >= 2 {
                    let got = cut_at_most(g, k, l, terminal, &opts).unwrap();
                    assert_eq!(got.found(), oracle::cut(g, k, l, terminal, false).unwrap().is_some());
                    if let Some(w) = got.witness {
                        assert!(check_cut(g, &w.x, &w.s, &w.y, k, l, CutMode::AtMost, terminal));
                    }
                }
            }
        }
    }
}

#[test]
fn nine_vertex_samples_match_oracle() {
    for g in common::sample(99, 9, 120) {
        compare(&g);
    }
}

#[test]
fn monotone_in_k_and_l() {
    let opts = SolveOptions::default();
    for g in common::sample(98, 8, 60) {
        for terminal in [None, Some(2)] {
            for l in 1..=3 {
                let row: Vec<bool> =
                    (0..=3).map(|k| cut_connected(&g, k, l, terminal, &opts).unwrap().found()).collect();
                assert!(row.windows(2).all(|w| !w[0] || w[1]));
            }
            for k in 0..=3 {
                let col: Vec<bool> = (2..=4).map(|l| cut_at_most(&g, k, l, terminal, &opts).unwrap().found()).collect();
                assert!(col.windows(2).all(|w| !w[0] || w[1]));
            }
        }
    }
}

#[test]
fn only_two_isolated_vertices() {
    // the only valid X with no neighbors is the pair of isolated vertices
    let g = Graph::disjoint_union(&[Graph::empty(2), Graph::complete(5)]).unwrap();
    let w = cut_at_most(&g, 0, 3, None, &SolveOptions::default()).unwrap().witness.unwrap();
    assert_eq!(w.x, vec![0, 1]);
    assert!(w.s.is_empty());
    assert!(!cut_connected(&g, 0, 2, None, &SolveOptions::default()).unwrap().found());
}
