use std::collections::HashSet;

use super::canon::{canonical_form, Rows};
use crate::sgraph::{Edge, Sign, SignedGraph};

pub(crate) fn graph_from_rows(rows: &[u32]) -> SignedGraph {
    let n = rows.len();
    let mut edges = Vec::new();
    for (u, row) in rows.iter().enumerate() {
        for v in u + 1..n {
            if row >> v & 1 == 1 {
                edges.push(Edge { u, v, sign: Sign::Plus });
            }
        }
    }
    SignedGraph::from_sorted(n, edges)
}

fn connected(rows: &[u32]) -> bool {
    let n = rows.len();
    if n == 0 {
        return true;
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        let mut bits = frontier;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// Every graph on `n` vertices up to isomorphism, as canonical forms in
/// sorted order. Brute force over labelled graphs, so only for `n <= 7`.
pub fn all_graphs(n: usize, connected_only: bool) -> Vec<SignedGraph> {
    assert!(n <= 7, "labelled enumeration is limited to 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen: HashSet<Rows> = HashSet::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut rows = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        if connected_only && !connected(&rows) {
            continue;
        }
        seen.insert(canonical_form(&rows, None).form);
    }
    let mut forms: Vec<Rows> = seen.into_iter().collect();
    forms.sort_unstable();
    forms.iter().map(|r| graph_from_rows(r)).collect()
}

/// Connected bipartite graphs on `n` vertices up to isomorphism, with
/// minimum degree at least `min_degree`, as canonical forms in sorted order.
///
/// Runs over biadjacency matrices with sides `a <= b`; rows of the smaller
/// side are taken in non-decreasing order, which every isomorphism class
/// admits.
pub fn bipartite_graphs(n: usize, min_degree: usize) -> Vec<SignedGraph> {
    assert!(n <= 16, "bipartite enumeration is limited to 16 vertices");
    let mut seen: HashSet<Rows> = HashSet::new();
    if n == 1 && min_degree == 0 {
        seen.insert(vec![0]);
    }
    for a in 1..=n / 2 {
        let b = n - a;
        let mut rows = vec![0u32; a];
        collect_rows(a, b, 0, 1, &mut rows, min_degree, &mut seen);
    }
    let mut forms: Vec<Rows> = seen.into_iter().collect();
    forms.sort_unstable();
    forms.iter().map(|r| graph_from_rows(r)).collect()
}

fn collect_rows(a: usize, b: usize, i: usize, low: u32, rows: &mut Vec<u32>, min_degree: usize, seen: &mut HashSet<Rows>) {
    if i == a {
        let n = a + b;
        let mut full = vec![0u32; n];
        for (u, &r) in rows.iter().enumerate() {
            full[u] = r << a;
            for v in 0..b {
                if r >> v & 1 == 1 {
                    full[a + v] |= 1 << u;
                }
            }
        }
        if full.iter().any(|r| (r.count_ones() as usize) < min_degree) || !connected(&full) {
            return;
        }
        seen.insert(canonical_form(&full, None).form);
        return;
    }
    for r in low..(1u32 << b) {
        if (r.count_ones() as usize) < min_degree {
            continue;
        }
        rows[i] = r;
        collect_rows(a, b, i + 1, r, rows, min_degree, seen);
    }
}
