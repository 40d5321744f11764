//! Independent reference implementations used as test oracles, plus seeded
//! random graph generators.
#![allow(dead_code)]

use num_rational::Ratio;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sigcrit::sgraph::{GirthVector, Sign, SignedGraph, SignedMultiGraph, WalkLength};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_sign(r: &mut ChaCha8Rng) -> Sign {
    if r.gen_bool(0.5) {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// Any signed graph on `n` vertices, each pair present with probability `p`.
pub fn random_signed(r: &mut ChaCha8Rng, n: usize, p: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v, random_sign(r)));
            }
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

/// Signed bipartite graph with random sides; cross pairs present with
/// probability `p`.
pub fn random_bipartite(r: &mut ChaCha8Rng, n: usize, p: f64) -> SignedGraph {
    let side: Vec<bool> = (0..n).map(|_| r.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && r.gen_bool(p) {
                edges.push((u, v, random_sign(r)));
            }
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

/// Signed multigraph where each pair independently gets a positive and a
/// negative edge with probability `p` each.
pub fn random_multi(r: &mut ChaCha8Rng, n: usize, p: f64) -> SignedMultiGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for s in [Sign::Plus, Sign::Minus] {
                if r.gen_bool(p) {
                    edges.push((u, v, s));
                }
            }
        }
    }
    SignedMultiGraph::new(n, edges).unwrap()
}

pub fn random_permutation(r: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = r.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}

fn negative_c4_sign(a: usize, b: usize) -> Option<Sign> {
    match (a.min(b), a.max(b)) {
        (0, 1) | (1, 2) | (2, 3) => Some(Sign::Plus),
        (0, 3) => Some(Sign::Minus),
        _ => None,
    }
}

fn sp_extend(g: &SignedGraph, map: &mut Vec<usize>, signs: &[Sign]) -> bool {
    let v = map.len();
    if v == g.n() {
        return true;
    }
    for t in 0..4 {
        let ok = g.edges().iter().filter(|e| e.v == v).all(|e| negative_c4_sign(map[e.u], t) == Some(signs[g.edge_index(e.u, e.v).unwrap()]));
        if ok {
            map.push(t);
            if sp_extend(g, map, signs) {
                return true;
            }
            map.pop();
        }
    }
    false
}

/// Edge-sign preserving map to the negative four-cycle, by plain
/// vertex-order backtracking.
pub fn sp_map_brute(g: &SignedGraph) -> Option<Vec<usize>> {
    let signs = g.signs();
    let mut map = Vec::new();
    sp_extend(g, &mut map, &signs).then_some(map)
}

/// Switching homomorphism to the negative four-cycle by trying every
/// switching with vertex 0 fixed.
pub fn switch_hom_brute(g: &SignedGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    (0u32..(1 << (n - 1))).any(|mask| {
        let flip = |v: usize| v > 0 && mask >> (v - 1) & 1 == 1;
        let signs: Vec<Sign> = g.edges().iter().map(|e| if flip(e.u) != flip(e.v) { -e.sign } else { e.sign }).collect();
        let mut map = Vec::new();
        sp_extend(g, &mut map, &signs)
    })
}

/// Shortest closed walk of each class, by tracking which (vertex, sign)
/// pairs are reachable from each start with exactly `len` edges.
pub fn girth_brute(g: &SignedGraph, max_len: usize) -> GirthVector {
    let n = g.n();
    let mut best = [WalkLength::Infinite; 4];
    for s in 0..n {
        let mut reach = vec![[false; 2]; n];
        reach[s][0] = true;
        for len in 1..=max_len {
            let mut next = vec![[false; 2]; n];
            for e in g.edges() {
                let neg = e.sign.is_negative() as usize;
                for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                    for p in 0..2 {
                        if reach[a][p] {
                            next[b][p ^ neg] = true;
                        }
                    }
                }
            }
            reach = next;
            for (p, &hit) in reach[s].iter().enumerate() {
                let idx = p << 1 | (len & 1);
                if hit {
                    best[idx] = best[idx].min(WalkLength::Finite(len));
                }
            }
        }
    }
    GirthVector::from_array(best)
}

/// Densest subgraph over all vertex subsets.
pub fn mad_brute(g: &SignedGraph) -> Ratio<i64> {
    let n = g.n();
    let mut best = Ratio::from_integer(0);
    for mask in 1u32..(1 << n) {
        let m = g.edges().iter().filter(|e| mask >> e.u & 1 == 1 && mask >> e.v & 1 == 1).count() as i64;
        let r = Ratio::new(2 * m, mask.count_ones() as i64);
        if r > best {
            best = r;
        }
    }
    best
}

/// Proper colouring with at most `k` colours, by trying all assignments.
pub fn colourable_brute(g: &SignedGraph, k: usize) -> bool {
    let n = g.n();
    let total = k.pow(n as u32);
    (0..total).any(|mut code| {
        let mut c = vec![0; n];
        for slot in c.iter_mut() {
            *slot = code % k;
            code /= k;
        }
        g.edges().iter().all(|e| c[e.u] != c[e.v])
    })
}

/// `X_2k`-colouring by trying all assignments from `{±1..±k}`.
pub fn x2k_brute(g: &SignedMultiGraph, k: usize) -> bool {
    let n = g.n();
    let values: Vec<i32> = (1..=k as i32).flat_map(|c| [c, -c]).collect();
    let base = values.len();
    (0..base.pow(n as u32)).any(|mut code| {
        let mut c = vec![0; n];
        for slot in c.iter_mut() {
            *slot = values[code % base];
            code /= base;
        }
        g.edges().iter().all(|e| c[e.u] != e.sign.as_i32() * c[e.v])
    })
}

/// Sign of every cycle of length up to `n` through simple paths, as a set
/// of (sorted vertex set, sign) pairs. Used to compare negative-cycle sets.
pub fn negative_cycles(g: &SignedGraph) -> std::collections::BTreeSet<Vec<(usize, usize)>> {
    let mut out = std::collections::BTreeSet::new();
    fn walk(
        g: &SignedGraph,
        start: usize,
        path: &mut Vec<usize>,
        neg: bool,
        out: &mut std::collections::BTreeSet<Vec<(usize, usize)>>,
    ) {
        let last = *path.last().unwrap();
        for &(w, s) in g.neighbors(last) {
            let neg2 = neg ^ s.is_negative();
            if w == start && path.len() >= 3 {
                if neg2 {
                    let mut edges: Vec<(usize, usize)> = path
                        .windows(2)
                        .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
                        .chain([(last.min(start), last.max(start))])
                        .collect();
                    edges.sort_unstable();
                    out.insert(edges);
                }
            } else if w > start && !path.contains(&w) {
                path.push(w);
                walk(g, start, path, neg2, out);
                path.pop();
            }
        }
    }
    for s in 0..g.n() {
        walk(g, s, &mut vec![s], false, &mut out);
    }
    out
}

/// Signed graphs on `1..=max_n` vertices: every pair gets a presence flag
/// and a sign.
pub fn signed_graphs(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec((any::<bool>(), any::<bool>()), pairs).prop_map(move |flags| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let (present, neg) = flags[i];
                    i += 1;
                    if present {
                        edges.push((u, v, Sign::from_negative(neg)));
                    }
                }
            }
            SignedGraph::new(n, edges).unwrap()
        })
    })
}

/// A graph together with a vertex subset (as a mask).
pub fn graph_and_subset(max_n: usize) -> impl Strategy<Value = (SignedGraph, Vec<bool>)> {
    signed_graphs(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(any::<bool>(), n))
    })
}
