//! Exhaustive search for critical signed bipartite graphs of a given order.
//!
//! Underlying graphs come from [`bipartite_graphs`]; for each one the
//! switching classes are taken with every spanning-tree edge positive, and
//! classes related by an automorphism are merged by keeping the smallest
//! non-tree sign vector of each orbit.

mod canon;
mod enumerate;

use rayon::prelude::*;
use serde::Serialize;

use crate::criticality::{is_critical_c4_serial, structural_check, Violation};
use crate::error::{Error, Result};
use crate::constructions::{gallery, GalleryId};
use crate::sgraph::{switching_isomorphic, Sign, SignedGraph, Vertex};

pub use canon::{canonical_form, rows_of, Canonical};
pub use enumerate::{all_graphs, bipartite_graphs};

pub const DEFAULT_CAP: usize = 8;
/// Cap to use when the caller has asked for a long run.
pub const LONG_RUN_CAP: usize = 9;

/// Necessary conditions for criticality used to thin the candidate stream.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prefilter {
    /// Also implies minimum degree two.
    pub two_connected: bool,
    pub no_three_thread: bool,
    pub no_degree_two_on_positive_four_cycle: bool,
}

impl Prefilter {
    pub const ALL: Prefilter =
        Prefilter { two_connected: true, no_three_thread: true, no_degree_two_on_positive_four_cycle: true };
    pub const NONE: Prefilter =
        Prefilter { two_connected: false, no_three_thread: false, no_degree_two_on_positive_four_cycle: false };
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub n: usize,
    pub cap: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub prefilter: Prefilter,
}

impl CensusOptions {
    pub fn new(n: usize) -> CensusOptions {
        CensusOptions { n, cap: DEFAULT_CAP, jobs: None, prefilter: Prefilter::ALL }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalClass {
    /// Representative in sg text format.
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub potential: i64,
    pub is_w_hat: bool,
    /// Degree-three vertices with two degree-two neighbours (informational).
    pub three_two_vertices: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub prefilter: Prefilter,
    pub underlying_graphs: usize,
    pub classes_examined: usize,
    pub critical_found: Vec<CriticalClass>,
    /// Critical classes with `3|E| < 4|V|`.
    pub exceptions: Vec<CriticalClass>,
}

fn spanning_forest(g: &SignedGraph) -> (Vec<Vertex>, Vec<Option<(Vertex, usize)>>) {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let start = order.len();
        order.push(r);
        let mut i = start;
        while i < order.len() {
            let x = order[i];
            for &(y, _) in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, g.edge_index(x, y).unwrap()));
                    order.push(y);
                }
            }
            i += 1;
        }
    }
    (order, parent)
}

/// One representative per switching class of signatures on `g`, up to the
/// automorphisms in `automorphisms`. Representatives have every edge of a
/// breadth-first spanning forest positive.
pub fn signature_classes(g: &SignedGraph, automorphisms: &[Vec<Vertex>]) -> Vec<SignedGraph> {
    let (order, parent) = spanning_forest(g);
    let tree: Vec<bool> = {
        let mut t = vec![false; g.edge_count()];
        for &(_, idx) in parent.iter().flatten() {
            t[idx] = true;
        }
        t
    };
    let free: Vec<usize> = (0..g.edge_count()).filter(|&i| !tree[i]).collect();
    let k = free.len();
    assert!(k < 32, "too many independent cycles for a census");
    // image of each free-edge basis vector under each automorphism, after
    // renormalising the tree
    let columns: Vec<Vec<u32>> = automorphisms
        .iter()
        .map(|p| {
            (0..k)
                .map(|j| {
                    let e = g.edges()[free[j]];
                    let moved = g.edge_index(p[e.u], p[e.v]).unwrap();
                    let mut label = vec![false; g.n()];
                    for &v in &order {
                        if let Some((w, idx)) = parent[v] {
                            label[v] = label[w] ^ (idx == moved);
                        }
                    }
                    let mut out = 0u32;
                    for (i, &f) in free.iter().enumerate() {
                        let e = g.edges()[f];
                        if (f == moved) ^ label[e.u] ^ label[e.v] {
                            out |= 1 << i;
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    let image = |cols: &[u32], s: u32| {
        let mut out = 0;
        let mut bits = s;
        while bits != 0 {
            out ^= cols[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        out
    };
    (0..(1u32 << k))
        .filter(|&s| columns.iter().all(|cols| image(cols, s) >= s))
        .map(|s| {
            let mut signs = vec![Sign::Plus; g.edge_count()];
            for (i, &f) in free.iter().enumerate() {
                signs[f] = Sign::from_negative(s >> i & 1 == 1);
            }
            g.with_signs(&signs)
        })
        .collect()
}

fn check_cap(opts: &CensusOptions) -> Result<()> {
    if opts.n > opts.cap {
        return Err(Error::CapExceeded { n: opts.n, cap: opts.cap });
    }
    if opts.n == 0 {
        return Err(Error::BadParameter("census order must be positive".into()));
    }
    Ok(())
}

fn keeps_underlying(g: &SignedGraph, f: Prefilter) -> bool {
    let v = structural_check(g);
    !(f.two_connected && v.iter().any(|x| matches!(x, Violation::NotTwoConnected { .. }))
        || f.no_three_thread && v.iter().any(|x| matches!(x, Violation::ThreeThread { .. })))
}

fn keeps_signature(g: &SignedGraph, f: Prefilter) -> bool {
    !f.no_degree_two_on_positive_four_cycle
        || !structural_check(g).iter().any(|x| matches!(x, Violation::DegreeTwoOnPositiveFourCycle { .. }))
}

fn candidates_of(g: &SignedGraph, f: Prefilter) -> Vec<SignedGraph> {
    let auts = canonical_form(&rows_of(g), None).automorphisms;
    signature_classes(g, &auts).into_iter().filter(|s| keeps_signature(s, f)).collect()
}

fn with_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(work()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::BadParameter(format!("cannot start {j} workers: {e}")))?;
            Ok(pool.install(work))
        }
    }
}

fn underlying(opts: &CensusOptions) -> Vec<SignedGraph> {
    let min_degree = if opts.prefilter.two_connected { 2 } else { 0 };
    bipartite_graphs(opts.n, min_degree)
        .into_iter()
        .filter(|g| keeps_underlying(g, opts.prefilter))
        .collect()
}

/// Connected bipartite signed graphs on `opts.n` vertices, one per class
/// under switching and isomorphism, thinned by `opts.prefilter`.
pub fn enumerate_candidates(opts: &CensusOptions) -> Result<Vec<SignedGraph>> {
    check_cap(opts)?;
    let graphs = underlying(opts);
    let f = opts.prefilter;
    with_pool(opts.jobs, || graphs.par_iter().flat_map_iter(|g| candidates_of(g, f)).collect())
}

/// Certifies every candidate and collects the critical ones.
pub fn run_census(opts: &CensusOptions) -> Result<CensusReport> {
    check_cap(opts)?;
    let graphs = underlying(opts);
    let f = opts.prefilter;
    let w_hat = gallery(GalleryId::WHat)?;
    let (examined, mut critical) = with_pool(opts.jobs, || {
        let per_graph: Vec<(usize, Vec<SignedGraph>)> = graphs
            .par_iter()
            .map(|g| {
                let cands = candidates_of(g, f);
                let count = cands.len();
                let crit = cands.into_par_iter().filter(|s| is_critical_c4_serial(s).is_critical()).collect();
                (count, crit)
            })
            .collect();
        let examined = per_graph.iter().map(|(c, _)| c).sum::<usize>();
        (examined, per_graph.into_iter().flat_map(|(_, v)| v).collect::<Vec<_>>())
    })?;
    critical.sort_by_key(|g| (g.edge_count(), g.to_sg()));
    let classes: Vec<CriticalClass> = critical
        .iter()
        .map(|g| CriticalClass {
            graph: g.to_sg(),
            vertices: g.n(),
            edges: g.edge_count(),
            potential: g.potential(),
            is_w_hat: g.n() == w_hat.n() && switching_isomorphic(g, &w_hat).is_some(),
            three_two_vertices: crate::criticality::three_two_vertices(g),
        })
        .collect();
    let exceptions = classes.iter().filter(|c| 3 * c.edges < 4 * c.vertices).cloned().collect();
    Ok(CensusReport {
        n: opts.n,
        prefilter: f,
        underlying_graphs: graphs.len(),
        classes_examined: examined,
        critical_found: classes,
        exceptions,
    })
}
