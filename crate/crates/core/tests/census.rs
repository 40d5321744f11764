mod common;

use common::*;
use sigcrit::census::*;
use sigcrit::constructions::{gallery, GalleryId};
use sigcrit::criticality::{is_critical_c4, structural_check};
use sigcrit::sgraph::*;

/// Critical classes on `n` vertices by brute force: every signature of every
/// connected bipartite graph, decided by exhaustive switching, deduplicated
/// by switching isomorphism.
fn critical_classes_brute(n: usize) -> Vec<SignedGraph> {
    let mut found: Vec<SignedGraph> = Vec::new();
    for g in all_graphs(n, true).into_iter().filter(|g| bipartition(g).is_some()) {
        let m = g.edge_count();
        for mask in 0u32..(1 << m) {
            let s = g.with_signs(&(0..m).map(|i| Sign::from_negative(mask >> i & 1 == 1)).collect::<Vec<_>>());
            if switch_hom_brute(&s) || !(0..m).all(|i| switch_hom_brute(&s.without_edge(i))) {
                continue;
            }
            if !found.iter().any(|f| f.edge_count() == m && switching_isomorphic(f, &s).is_some()) {
                found.push(s);
            }
        }
    }
    found
}

fn census(n: usize, prefilter: Prefilter) -> CensusReport {
    run_census(&CensusOptions { prefilter, ..CensusOptions::new(n) }).unwrap()
}

fn parsed(report: &CensusReport) -> Vec<SignedGraph> {
    report.critical_found.iter().map(|c| parse_sg(&c.graph).unwrap()).collect()
}

#[test]
fn census_matches_brute_force_up_to_seven() {
    for n in 4..=7 {
        let brute = critical_classes_brute(n);
        for f in [Prefilter::ALL, Prefilter::NONE] {
            let found = parsed(&census(n, f));
            assert_eq!(found.len(), brute.len(), "n={n}");
            for b in &brute {
                assert!(found.iter().any(|g| switching_isomorphic(g, b).is_some()));
            }
        }
    }
}

#[test]
fn small_orders() {
    assert!(census(4, Prefilter::ALL).critical_found.is_empty());
    assert!(census(5, Prefilter::ALL).critical_found.is_empty());
    assert!(enumerate_candidates(&CensusOptions::new(5)).unwrap().is_empty());
    let six = census(6, Prefilter::ALL);
    assert_eq!(six.critical_found.len(), 1);
    let c = &six.critical_found[0];
    assert_eq!((c.edges, c.potential), (8, 0));
    assert!(switching_isomorphic(&parse_sg(&c.graph).unwrap(), &gallery(GalleryId::Gamma).unwrap()).is_some());
    assert!(six.exceptions.is_empty());
}

#[test]
fn four_vertex_stream_without_thread_filter() {
    let only_2c = Prefilter { two_connected: true, ..Prefilter::NONE };
    let cands = enumerate_candidates(&CensusOptions { prefilter: only_2c, ..CensusOptions::new(4) }).unwrap();
    let c4 = gallery(GalleryId::CMinus(4)).unwrap();
    assert_eq!(cands.len(), 2);
    assert!(cands.iter().any(|g| switching_isomorphic(g, &c4).is_some()));
    assert!(cands.iter().any(|g| switching_isomorphic(g, &c4.all_positive()).is_some()));
}

#[test]
fn seven_and_eight() {
    let w = gallery(GalleryId::WHat).unwrap();
    for f in [Prefilter::ALL, Prefilter::NONE] {
        let seven = census(7, f);
        assert_eq!(seven.critical_found.len(), 1);
        let c = &seven.critical_found[0];
        assert!(c.is_w_hat);
        assert_eq!((c.edges, c.potential), (9, 1));
        assert_eq!(c.three_two_vertices.len(), 3);
        assert_eq!(seven.exceptions, seven.critical_found);
        assert!(switching_isomorphic(&parse_sg(&c.graph).unwrap(), &w).is_some());
        assert!(census(8, f).critical_found.is_empty());
    }
}

#[test]
fn candidates_are_distinct_classes() {
    for f in [Prefilter::ALL, Prefilter::NONE] {
        let cands = enumerate_candidates(&CensusOptions { prefilter: f, ..CensusOptions::new(6) }).unwrap();
        for (i, a) in cands.iter().enumerate() {
            assert!(a.is_connected() && bipartition(a).is_some());
            for b in &cands[i + 1..] {
                assert!(a.edge_count() != b.edge_count() || switching_isomorphic(a, b).is_none());
            }
        }
    }
}

#[test]
fn prefilters_are_sound() {
    // nothing rejected by a filter is critical
    for n in 4..=7 {
        let all = enumerate_candidates(&CensusOptions { prefilter: Prefilter::NONE, ..CensusOptions::new(n) }).unwrap();
        for g in all {
            if !structural_check(&g).is_empty() {
                assert!(!is_critical_c4(&g).is_critical(), "{g:?}");
            }
        }
    }
}

#[test]
fn deterministic_across_thread_counts() {
    let run = |jobs| {
        let r = run_census(&CensusOptions { jobs: Some(jobs), ..CensusOptions::new(7) }).unwrap();
        serde_json::to_string(&r).unwrap()
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn cap_and_long_run() {
    assert!(run_census(&CensusOptions::new(9)).is_err());
    let r = run_census(&CensusOptions { cap: LONG_RUN_CAP, ..CensusOptions::new(9) }).unwrap();
    assert_eq!(r.critical_found.len(), 2);
    for c in &r.critical_found {
        let g = parse_sg(&c.graph).unwrap();
        assert_eq!(c.edges, 12);
        assert!(structural_check(&g).is_empty());
        let perm = random_permutation(&mut rng(c.edges as u64), g.n());
        assert!(is_critical_c4(&g.relabel(&perm)).is_critical());
    }
    assert!(r.exceptions.is_empty());
}
