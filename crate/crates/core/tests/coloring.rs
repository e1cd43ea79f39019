use std::collections::BTreeSet;

use colorcode::coloring::{get_coloring, threshold, verify_family, write_family, FamilyParams, MemberStream};
use colorcode::runner::{search_members, Engine, Exec, Schedule};
use num_bigint::BigUint;
use proptest::prelude::*;

#[test]
fn coverage_on_small_grid() {
    for n in 1..=10 {
        for k in 1..=3.min(n) {
            for c in 1..=3 {
                let params = FamilyParams::new(n, k, c, 1).unwrap();
                let report = verify_family(&params).unwrap();
                assert!(report.covered, "(n={n}, k={k}, c={c}) not covered: {:?}", report.counterexample);
            }
        }
    }
}

#[test]
fn size_counts_distinct_triples() {
    for (n, k, c) in [(4, 1, 2), (5, 2, 2), (6, 2, 3), (3, 1, 1)] {
        let params = FamilyParams::new(n, k, c, 1).unwrap();
        let omegas = (c as u64).pow((k * k) as u32);
        let triples: u64 = (2..=params.p_bound()).map(|p| p * omegas).sum();
        assert_eq!(params.family_size(), BigUint::from(triples));
        assert_eq!(params.block_count(), (2..=params.p_bound()).sum::<u64>());
    }
}

#[test]
fn every_index_decodes_to_its_own_triple() {
    let params = FamilyParams::new(5, 2, 2, 1).unwrap();
    let omegas = 1u64 << 4;
    let mut index = 0u64;
    for p in 2..=params.p_bound() {
        for a in 0..p {
            for omega in 0..omegas {
                let col = get_coloring(&params, &BigUint::from(index)).unwrap();
                let expect: Vec<u8> = (1..=5u64).map(|x| ((omega >> ((a * x % p) % 4)) & 1) as u8 + 1).collect();
                assert_eq!(col.values, expect, "index {index} = (p={p}, a={a}, omega={omega})");
                index += 1;
            }
        }
    }
    assert_eq!(BigUint::from(index), params.family_size());
    assert!(get_coloring(&params, &params.family_size()).is_err());
}

#[test]
fn dump_has_one_line_per_member() {
    let params = FamilyParams::new(4, 1, 2, 1).unwrap();
    let mut buf = Vec::new();
    write_family(&params, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), format!("ucf 4 1 2 {}", params.family_size()));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(BigUint::from(rows.len()), params.family_size());
    for (i, row) in rows.iter().enumerate() {
        let col = get_coloring(&params, &BigUint::from(i)).unwrap();
        let expect: Vec<String> = col.values.iter().map(u8::to_string).collect();
        assert_eq!(*row, expect.join(" "));
    }
}

#[test]
fn stream_members_are_distinct_and_ascending() {
    let params = FamilyParams::new(6, 2, 2, 1).unwrap();
    let mut seen = BTreeSet::new();
    let mut last: Option<BigUint> = None;
    for m in MemberStream::new(params.clone()) {
        assert!(seen.insert(m.values.clone()));
        let colorcode::coloring::MemberRef::Family(key) = &m.key else { panic!("family member expected") };
        let ord = params.ordinal(key);
        assert_eq!(get_coloring(&params, &ord).unwrap().values, m.values);
        assert!(last.as_ref().is_none_or(|l| *l < ord));
        last = Some(ord);
    }
}

#[test]
fn threshold_matches_popcount() {
    for len in 0..=10usize {
        for mask in 0u32..1 << len {
            let bits: Vec<bool> = (0..len).map(|i| mask >> i & 1 == 1).collect();
            for t in 1..=4 {
                assert_eq!(threshold(&bits, t).unwrap(), mask.count_ones() as usize >= t, "{bits:?} t={t}");
            }
        }
    }
    assert!(threshold(&[true], 0).is_err());
}

#[test]
fn search_result_ignores_thread_count() {
    let pred = |v: &[u8]| (v[0] == 2 && v[3] == 1 && v[5] == 2).then(|| v.to_vec());
    let mut results = Vec::new();
    for threads in [1, 2, 8] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let r = pool.install(|| {
            let mut s = Schedule::new(Engine::ColorCode, 8, 3, 2, 1).unwrap();
            let (hit, stats) = search_members(&mut s, Exec::Parallel, pred);
            let hit = hit.unwrap();
            (hit.ordinal, hit.value, stats)
        });
        results.push(r);
    }
    let mut s = Schedule::new(Engine::ColorCode, 8, 3, 2, 1).unwrap();
    let (hit, stats) = search_members(&mut s, Exec::Sequential, pred);
    let hit = hit.unwrap();
    results.push((hit.ordinal, hit.value, stats));
    assert!(results.windows(2).all(|w| w[0] == w[1]));
}

proptest! {
    #[test]
    fn get_coloring_is_deterministic(n in 1usize..13, k in 1usize..4, c in 1usize..4, seed in any::<u64>()) {
        prop_assume!(k <= n && n >= 3);
        let params = FamilyParams::new(n, k, c, 1).unwrap();
        let index = BigUint::from(seed) % params.family_size();
        let a = get_coloring(&params, &index).unwrap();
        let b = get_coloring(&params, &index).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.values.iter().all(|&v| v >= 1 && v as usize <= c));
        prop_assert!(params.family_size() <= params.size_bound());
    }
}
