mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use sigcrit::constructions::{gallery, t_subdivide_multi, tilde, cycle, GalleryId};
use sigcrit::homsolver::*;
use sigcrit::sgraph::*;

fn bipartite_graphs(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (any::<u64>(), 1..=max_n, 0.2f64..0.6).prop_map(|(seed, n, p)| random_bipartite(&mut rng(seed), n, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn duality_is_sound(g in bipartite_graphs(8)) {
        match sp_hom_c4(&g).unwrap() {
            HomVerdict::Mapped(h) => {
                prop_assert!(h.switch.is_empty());
                prop_assert!(verify_hom(&g, &c_minus_4(), &h).unwrap());
            }
            HomVerdict::NoHom(NoHomReason::Witness(w)) => {
                prop_assert!(w.holds_in(&g));
                prop_assert!(sp_map_brute(&g).is_none());
            }
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn solvers_agree_with_switching_brute_force(g in bipartite_graphs(9)) {
        let fast = hom_c4(&g);
        let generic = hom_to_target(&g, &c_minus_4(), DEFAULT_BUDGET).unwrap();
        let brute = switch_hom_brute(&g);
        prop_assert_eq!(fast.is_mapped(), brute);
        prop_assert_eq!(generic.is_mapped(), brute);
        for v in [&fast, &generic] {
            if let Some(h) = v.homomorphism() {
                prop_assert!(verify_hom(&g, &c_minus_4(), h).unwrap());
            }
        }
    }

    #[test]
    fn maps_restrict_to_subgraphs(g in bipartite_graphs(9)) {
        if hom_c4(&g).is_mapped() {
            for i in 0..g.edge_count() {
                prop_assert!(hom_c4(&g.without_edge(i)).is_mapped());
            }
        }
    }

    #[test]
    fn verdict_is_switching_invariant(g in bipartite_graphs(9), seed in any::<u64>()) {
        let mut r = rng(seed);
        let mask: Vec<bool> = random_permutation(&mut r, g.n()).iter().map(|&x| x % 2 == 0).collect();
        let h = switch(&g, &SwitchSet::from_mask(&mask)).unwrap();
        prop_assert_eq!(hom_c4(&g).is_mapped(), hom_c4(&h).is_mapped());
    }

    #[test]
    fn no_homomorphism_lemma(g in signed_graphs(7), target in 0usize..4) {
        let h = match target {
            0 => c_minus_4(),
            1 => gallery(GalleryId::CMinus(6)).unwrap(),
            2 => SignedGraph::new(3, [(0, 1, Sign::Plus), (1, 2, Sign::Minus), (0, 2, Sign::Plus)]).unwrap(),
            _ => gallery(GalleryId::WHat).unwrap(),
        };
        if hom_to_target(&g, &h, DEFAULT_BUDGET).unwrap().is_mapped() {
            prop_assert!(girth_vector(&g).dominates(&girth_vector(&h)));
        }
    }

    #[test]
    fn complemented_certificates_verify(g in bipartite_graphs(9)) {
        if let HomVerdict::Mapped(h) = hom_c4(&g) {
            prop_assert!(verify_hom(&g, &c_minus_4(), &h.complemented()).unwrap());
        }
    }
}

#[test]
fn named_graph_verdicts() {
    let w = gallery(GalleryId::WHat).unwrap();
    assert!(!hom_c4(&w).is_mapped());
    assert!(!hom_to_target(&w, &c_minus_4(), DEFAULT_BUDGET).unwrap().is_mapped());
    let gamma = gallery(GalleryId::Gamma).unwrap();
    assert!(!hom_c4(&gamma).is_mapped());
    for i in 0..gamma.edge_count() {
        assert!(hom_c4(&gamma.without_edge(i)).is_mapped());
    }
    for id in [GalleryId::Omega1, GalleryId::Omega2] {
        let g = gallery(id).unwrap();
        let v = sp_hom_c4(&g).unwrap();
        assert!(verify_hom(&g, &c_minus_4(), v.homomorphism().expect("fixed signature maps")).unwrap());
    }
    let single = SignedGraph::new(2, [(0, 1, Sign::Plus)]).unwrap();
    assert_eq!(sp_hom_c4(&single).unwrap().homomorphism().unwrap().map, vec![2, 1]);
}

#[test]
fn t2_of_doubled_five_cycle_minus_any_edge_maps() {
    let g = t_subdivide_multi(&tilde(&cycle(5).unwrap()), 2).unwrap();
    assert!(!hom_to_target(&g, &c_minus_4(), DEFAULT_BUDGET).unwrap().is_mapped());
    for i in 0..g.edge_count() {
        let h = g.without_edge(i);
        let generic = hom_to_target(&h, &c_minus_4(), DEFAULT_BUDGET).unwrap();
        assert!(generic.is_mapped());
        assert!(hom_c4(&h).is_mapped());
    }
}

#[test]
fn small_side_always_maps() {
    let mut r = rng(7);
    for _ in 0..300 {
        let n = r.gen_range(3..=9);
        let g = random_bipartite(&mut r, n, 0.6);
        let (a, b) = bipartition(&g).unwrap();
        if a.len().min(b.len()) <= 2 {
            assert!(hom_c4(&g).is_mapped());
        }
    }
}

#[test]
fn json_certificates() {
    let v = hom_c4(&gallery(GalleryId::DualPath).unwrap());
    let text = serde_json::to_string(&v).unwrap();
    assert!(text.starts_with(r#"{"verdict":"mapped","switch":"#));
    let w = sp_hom_c4(&gallery(GalleryId::DualPath).unwrap()).unwrap();
    assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"verdict":"nohom","witness":{"path":[[0,1],[1,2],[2,3]]}}"#);
}
