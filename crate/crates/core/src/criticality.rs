//! Criticality with respect to the negative four-cycle, and the structural
//! conditions every critical graph satisfies.

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::Result;
use crate::homsolver::{c_minus_4, hom_c4, hom_to_target, HomVerdict, Homomorphism, NoHomReason};
use crate::sgraph::{girth_vector, Edge, ParityClass, SignedGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriticalVerdict {
    Critical,
    MapsToC4(Homomorphism),
    FailsGirth(ParityClass),
    /// Deleting `edge` (at `index` in edge order) still leaves no map.
    NonCriticalEdge { index: usize, edge: Edge, residual: NoHomReason },
}

impl CriticalVerdict {
    pub fn is_critical(&self) -> bool {
        matches!(self, CriticalVerdict::Critical)
    }
}

impl Serialize for CriticalVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        match self {
            CriticalVerdict::Critical => m.serialize_entry("verdict", "critical")?,
            CriticalVerdict::MapsToC4(h) => {
                m.serialize_entry("verdict", "maps")?;
                m.serialize_entry("certificate", &HomVerdict::Mapped(h.clone()))?;
            }
            CriticalVerdict::FailsGirth(c) => {
                m.serialize_entry("verdict", "fails_girth")?;
                m.serialize_entry("class", c)?;
            }
            CriticalVerdict::NonCriticalEdge { index, edge, residual } => {
                m.serialize_entry("verdict", "non_critical_edge")?;
                m.serialize_entry("index", index)?;
                m.serialize_entry("edge", &(edge.u, edge.v, edge.sign))?;
                m.serialize_entry("residual", &HomVerdict::NoHom(residual.clone()))?;
            }
        }
        m.end()
    }
}

/// Decides whether `g` is critical for the negative four-cycle: it meets the
/// girth conditions, has no homomorphism, and every proper subgraph has one.
///
/// Only the graphs `g - e` are tested. Every proper subgraph sits inside one
/// of them (or is `g` minus vertices, which is inside `g - e` for any `e` at
/// a removed vertex), and a map of a subgraph extends to any isolated
/// vertices. The edge checks run in parallel; on failure the lowest edge
/// index is reported.
pub fn is_critical_c4(g: &SignedGraph) -> CriticalVerdict {
    match hom_c4(g) {
        HomVerdict::Mapped(h) => return CriticalVerdict::MapsToC4(h),
        HomVerdict::NoHom(NoHomReason::GirthViolation(c)) => return CriticalVerdict::FailsGirth(c),
        HomVerdict::NoHom(_) => {}
    }
    let failing = (0..g.edge_count())
        .into_par_iter()
        .find_map_first(|i| match hom_c4(&g.without_edge(i)) {
            HomVerdict::Mapped(_) => None,
            HomVerdict::NoHom(r) => Some((i, r)),
        });
    match failing {
        None => CriticalVerdict::Critical,
        Some((index, residual)) => CriticalVerdict::NonCriticalEdge { index, edge: g.edges()[index], residual },
    }
}

/// Sequential variant of [`is_critical_c4`], for callers that already
/// parallelise over many graphs.
pub fn is_critical_c4_serial(g: &SignedGraph) -> CriticalVerdict {
    match hom_c4(g) {
        HomVerdict::Mapped(h) => return CriticalVerdict::MapsToC4(h),
        HomVerdict::NoHom(NoHomReason::GirthViolation(c)) => return CriticalVerdict::FailsGirth(c),
        HomVerdict::NoHom(_) => {}
    }
    for i in 0..g.edge_count() {
        if let HomVerdict::NoHom(residual) = hom_c4(&g.without_edge(i)) {
            return CriticalVerdict::NonCriticalEdge { index: i, edge: g.edges()[i], residual };
        }
    }
    CriticalVerdict::Critical
}

/// Criticality for an arbitrary target `h`, using the generic solver with a
/// node budget per call. Girth conditions are checked against `h`.
pub fn is_critical_for(g: &SignedGraph, h: &SignedGraph, budget: u64) -> Result<CriticalVerdict> {
    if let Some(c) = girth_vector(g).first_violation(&girth_vector(h)) {
        return Ok(CriticalVerdict::FailsGirth(c));
    }
    match hom_to_target(g, h, budget)? {
        HomVerdict::Mapped(phi) => return Ok(CriticalVerdict::MapsToC4(phi)),
        HomVerdict::NoHom(_) => {}
    }
    for i in 0..g.edge_count() {
        if let HomVerdict::NoHom(residual) = hom_to_target(&g.without_edge(i), h, budget)? {
            return Ok(CriticalVerdict::NonCriticalEdge { index: i, edge: g.edges()[i], residual });
        }
    }
    Ok(CriticalVerdict::Critical)
}

/// Same as [`is_critical_c4`] but through the generic solver; used to
/// cross-check the specialised one.
pub fn is_critical_c4_generic(g: &SignedGraph, budget: u64) -> Result<CriticalVerdict> {
    is_critical_for(g, &c_minus_4(), budget)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Disconnected, fewer than three vertices, or `cut_vertex` separates it.
    NotTwoConnected { cut_vertex: Option<Vertex> },
    /// A path `a u v b` whose inner vertices have degree two.
    ThreeThread { path: [Vertex; 4] },
    /// A degree-two vertex on a positive four-cycle `v a w b`.
    DegreeTwoOnPositiveFourCycle { vertex: Vertex, cycle: [Vertex; 4] },
}

fn connected_without(g: &SignedGraph, skip: Vertex) -> bool {
    let n = g.n();
    let Some(start) = (0..n).find(|&v| v != skip) else { return true };
    let mut seen = vec![false; n];
    seen[skip] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &(y, _) in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n - 1
}

/// Necessary conditions for criticality. An empty list does not imply
/// criticality.
pub fn structural_check(g: &SignedGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    if g.n() < 3 || !g.is_connected() {
        out.push(Violation::NotTwoConnected { cut_vertex: None });
    } else if let Some(v) = (0..g.n()).find(|&v| !connected_without(g, v)) {
        out.push(Violation::NotTwoConnected { cut_vertex: Some(v) });
    }
    for e in g.edges() {
        if g.degree(e.u) != 2 || g.degree(e.v) != 2 {
            continue;
        }
        let a = g.neighbors(e.u).iter().map(|&(x, _)| x).find(|&x| x != e.v).unwrap();
        let b = g.neighbors(e.v).iter().map(|&(x, _)| x).find(|&x| x != e.u).unwrap();
        if a != b {
            out.push(Violation::ThreeThread { path: [a, e.u, e.v, b] });
        }
    }
    for v in 0..g.n() {
        if g.degree(v) != 2 {
            continue;
        }
        let [(a, sa), (b, sb)] = [g.neighbors(v)[0], g.neighbors(v)[1]];
        let positive = g.neighbors(a).iter().find(|&&(w, sw)| {
            w != v && g.sign_of(w, b).is_some_and(|swb| !(sa * sb * sw * swb).is_negative())
        });
        if let Some(&(w, _)) = positive {
            out.push(Violation::DegreeTwoOnPositiveFourCycle { vertex: v, cycle: [v, a, w, b] });
        }
    }
    out
}

/// Degree-three vertices with at least two degree-two neighbours. Reported
/// for information only: such vertices do occur in critical graphs.
pub fn three_two_vertices(g: &SignedGraph) -> Vec<Vertex> {
    (0..g.n())
        .filter(|&v| g.degree(v) == 3 && g.neighbors(v).iter().filter(|&&(w, _)| g.degree(w) == 2).count() >= 2)
        .collect()
}
