mod common;

use common::*;
use sigcrit::census::all_graphs;
use sigcrit::coloring::*;
use sigcrit::constructions::*;
use sigcrit::homsolver::{hom_c4, hom_to_target, verify_hom, DEFAULT_BUDGET};
use sigcrit::sgraph::*;

fn graphs_up_to(n: usize) -> Vec<SignedGraph> {
    (1..=n).flat_map(|k| all_graphs(k, false)).collect()
}

#[test]
fn k_coloring_matches_brute_force() {
    for g in graphs_up_to(6) {
        for k in 1..=4 {
            let c = k_coloring(&g, k);
            assert_eq!(c.is_some(), colourable_brute(&g, k), "{g:?} k={k}");
            if let Some(c) = c {
                assert!(is_proper_coloring(&g, &c) && c.iter().all(|&x| x < k));
            }
        }
    }
}

#[test]
fn four_colouring_bridge_on_small_graphs() {
    let connected: usize = (1..=6).map(|n| all_graphs(n, true).len()).sum();
    assert_eq!(connected, 143);
    let extra = [complete(5), complete(4), wheel(5).unwrap(), petersen()];
    for g in graphs_up_to(6).iter().chain(&extra) {
        let t = t_subdivide(&g.all_positive(), 2).unwrap();
        let colourable = k_coloring(g, 4).is_some();
        assert_eq!(hom_c4(&t).is_mapped(), colourable, "{g:?}");
        match four_color_via_c4(g) {
            Some(c) => assert!(colourable && is_proper_coloring(g, &c) && c.iter().all(|&x| x < 4)),
            None => assert!(!colourable),
        }
    }
    assert!(four_color_via_c4(&complete(5)).is_none());
}

/// Apollonian triangulation: every step stacks a vertex into a face.
fn stacked_triangulation(r: &mut rand_chacha::ChaCha8Rng, n: usize) -> SignedGraph {
    use rand::Rng;
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let i = r.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    SignedGraph::unsigned(n, edges).unwrap()
}

#[test]
fn planar_graphs_are_four_coloured() {
    let mut r = rng(21);
    for n in 4..=14 {
        for _ in 0..5 {
            let g = stacked_triangulation(&mut r, n);
            let c = four_color_via_c4(&g).expect("planar graphs are four-colourable");
            assert!(is_proper_coloring(&g, &c) && c.iter().all(|&x| x < 4));
        }
    }
    for rim in 3..=9 {
        let w = wheel(rim).unwrap();
        assert!(four_color_via_c4(&w).is_some());
        assert_eq!(k_coloring(&w, 3).is_some(), rim % 2 == 0);
    }
}

#[test]
fn petersen_is_three_chromatic() {
    let p = petersen();
    assert!(k_coloring(&p, 2).is_none());
    let c = k_coloring(&p, 3).unwrap();
    assert!(is_proper_coloring(&p, &c));
}

#[test]
fn six_colouring_spot_checks() {
    let c6 = gallery(GalleryId::CMinus(6)).unwrap();
    for (g, colourable) in [(cycle(5).unwrap(), true), (complete(4), true), (petersen(), true), (complete(6), true)] {
        let t = t_subdivide(&g.all_positive(), 4).unwrap();
        let v = hom_to_target(&t, &c6, DEFAULT_BUDGET).unwrap();
        assert_eq!(v.is_mapped(), colourable);
        assert!(verify_hom(&t, &c6, v.homomorphism().unwrap()).unwrap());
    }
}

#[test]
fn doubled_graph_bridge() {
    // chi(G) <= k iff T_{2k-2} of the doubled graph maps to C_{-2k}
    for k in 2..=3usize {
        let target = gallery(GalleryId::CMinus(2 * k)).unwrap();
        let max_n = if k == 2 { 6 } else { 4 };
        for g in graphs_up_to(max_n).iter().chain([&complete(k + 1)]) {
            let t = t_subdivide_multi(&tilde(g), 2 * k - 2).unwrap();
            let mapped = hom_to_target(&t, &target, DEFAULT_BUDGET).unwrap().is_mapped();
            assert_eq!(mapped, k_coloring(g, k).is_some(), "k={k} {g:?}");
        }
    }
}

#[test]
fn x4_colouring_bridge() {
    use rand::Rng;
    let mut r = rng(8);
    for _ in 0..300 {
        let n = r.gen_range(1..=6);
        let p = r.gen_range(0.2..0.7);
        let g = random_multi(&mut r, n, p);
        let x = x2k_coloring(&g, 2);
        assert_eq!(x.is_some(), x2k_brute(&g, 2), "{g:?}");
        if let Some(x) = &x {
            assert!(x.is_valid(&g, 2));
        }
        let t = t_subdivide_multi(&g, 2).unwrap();
        assert_eq!(hom_c4(&t).is_mapped(), x.is_some(), "{g:?}");
    }
}

#[test]
fn x2k_examples() {
    let digon = tilde(&SignedGraph::unsigned(2, [(0, 1)]).unwrap());
    assert!(x2k_coloring(&digon, 1).is_none());
    assert!(x2k_coloring(&digon, 2).is_some());
    let k4 = SignedMultiGraph::from(&complete(4));
    assert!(x2k_coloring(&k4, 1).is_none());
    assert!(x2k_coloring(&k4, 2).unwrap().is_valid(&k4, 2));
}
