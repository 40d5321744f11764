//! Unsigned graphs, delivered all-positive.

use crate::error::{Error, Result};
use crate::sgraph::SignedGraph;

pub fn complete(n: usize) -> SignedGraph {
    SignedGraph::unsigned(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("simple by construction")
}

pub fn path(n: usize) -> SignedGraph {
    SignedGraph::unsigned(n, (1..n).map(|v| (v - 1, v))).expect("simple by construction")
}

pub fn cycle(n: usize) -> Result<SignedGraph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("cycle length {n} is below 3")));
    }
    SignedGraph::unsigned(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Hub `0` joined to a rim cycle `1..=rim`.
pub fn wheel(rim: usize) -> Result<SignedGraph> {
    if rim < 3 {
        return Err(Error::BadParameter(format!("wheel rim {rim} is below 3")));
    }
    let spokes = (1..=rim).map(|v| (0, v));
    let rim_edges = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
    SignedGraph::unsigned(rim + 1, spokes.chain(rim_edges))
}

pub fn petersen() -> SignedGraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    SignedGraph::unsigned(10, outer.chain(spokes).chain(inner)).expect("static graph")
}

pub fn complete_bipartite(a: usize, b: usize) -> SignedGraph {
    SignedGraph::unsigned(a + b, (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)))).expect("simple by construction")
}
