//! Signed graphs, switching, girth vectors and the density measures used
//! throughout the crate.
//!
//! Vertices are dense ids `0..n`. Edge lists are stored canonically: every
//! edge has `u < v` and the list is sorted, so two graphs are structurally
//! equal exactly when their vertex counts and edge lists are equal.

mod girth;
mod io;
mod iso;
mod mad;
pub(crate) mod switching;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use girth::{girth_vector, negative_girth, GirthVector, ParityClass, WalkLength};
pub use io::{parse_sg, parse_sg_stream, parse_sgm, GraphText};
pub use iso::{find_switching_subgraph, switching_isomorphic};
pub use mad::{mad_by_flow, mad_by_subsets, max_average_degree};
pub use switching::{bipartition, is_balanced, switch, switching_equivalent};

pub type Vertex = usize;

/// Edge sign. `Plus < Minus`, which is the order used for canonical sign vectors.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn from_negative(neg: bool) -> Sign {
        if neg {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_negative(self.is_negative() != rhs.is_negative())
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign::from_negative(!self.is_negative())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An edge in canonical orientation (`u < v`).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub sign: Sign,
}

impl Edge {
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

fn orient(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn build_adjacency(n: usize, edges: &[Edge]) -> Vec<Vec<(Vertex, Sign)>> {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.u].push((e.v, e.sign));
        adj[e.v].push((e.u, e.sign));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// A simple undirected graph with a sign on every edge.
#[derive(Clone)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(Vertex, Sign)>>,
}

impl PartialEq for SignedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for SignedGraph {}

impl Hash for SignedGraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl PartialOrd for SignedGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.edges).cmp(&(other.n, &other.edges))
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}; ", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign, e.v)?;
        }
        write!(f, ")")
    }
}

impl SignedGraph {
    /// Builds a simple signed graph, rejecting loops, repeated pairs and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Sign)>,
    {
        let mut list = Vec::new();
        for (u, v, sign) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let (u, v) = orient(u, v);
            list.push(Edge { u, v, sign });
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if (w[0].u, w[0].v) == (w[1].u, w[1].v) {
                return Err(Error::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Caller guarantees canonical, simple, in-range edges.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> SignedGraph {
        debug_assert!(edges.windows(2).all(|w| (w[0].u, w[0].v) < (w[1].u, w[1].v)));
        debug_assert!(edges.iter().all(|e| e.u < e.v && e.v < n));
        let adj = build_adjacency(n, &edges);
        SignedGraph { n, edges, adj }
    }

    /// Builds from arbitrary-orientation edges the caller knows are simple.
    pub(crate) fn from_unsorted(n: usize, edges: impl IntoIterator<Item = Edge>) -> SignedGraph {
        let mut list: Vec<Edge> = edges
            .into_iter()
            .map(|e| {
                let (u, v) = orient(e.u, e.v);
                Edge { u, v, sign: e.sign }
            })
            .collect();
        list.sort_unstable();
        Self::from_sorted(n, list)
    }

    /// The all-positive graph with the given unsigned edges.
    pub fn unsigned<I>(n: usize, edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        SignedGraph::new(n, edges.into_iter().map(|(u, v)| (u, v, Sign::Plus)))
    }

    pub fn empty(n: usize) -> SignedGraph {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, Sign)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn sign_of(&self, u: Vertex, v: Vertex) -> Option<Sign> {
        if u >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search_by(|&(w, _)| w.cmp(&v))
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.sign_of(u, v).is_some()
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let (u, v) = orient(u, v);
        self.edges.binary_search_by(|e| (e.u, e.v).cmp(&(u, v))).ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Same vertex set, edge `idx` removed.
    pub fn without_edge(&self, idx: usize) -> SignedGraph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Self::from_sorted(self.n, edges)
    }

    /// Same vertex set, every edge at `v` removed (`v` becomes isolated).
    pub fn isolate_vertex(&self, v: Vertex) -> SignedGraph {
        let edges = self.edges.iter().filter(|e| e.u != v && e.v != v).copied().collect();
        Self::from_sorted(self.n, edges)
    }

    /// Deletes vertex `v` and renumbers the vertices above it down by one.
    pub fn remove_vertex(&self, v: Vertex) -> SignedGraph {
        let shift = |x: Vertex| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|e| e.u != v && e.v != v)
            .map(|e| Edge { u: shift(e.u), v: shift(e.v), sign: e.sign })
            .collect();
        Self::from_sorted(self.n - 1, edges)
    }

    /// Adds one new edge; fails if it would break simplicity.
    pub fn with_edge(&self, u: Vertex, v: Vertex, sign: Sign) -> Result<SignedGraph> {
        let mut raw: Vec<_> = self.edges.iter().map(|e| (e.u, e.v, e.sign)).collect();
        raw.push((u, v, sign));
        SignedGraph::new(self.n, raw)
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| Edge { u: e.u + off, v: e.v + off, sign: e.sign }))
            .collect::<Vec<_>>();
        Self::from_sorted(self.n + other.n, edges)
    }

    /// Renames vertex `x` to `perm[x]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> SignedGraph {
        assert_eq!(perm.len(), self.n, "relabeling must cover every vertex");
        Self::from_unsorted(
            self.n,
            self.edges.iter().map(|e| Edge { u: perm[e.u], v: perm[e.v], sign: e.sign }),
        )
    }

    /// Same underlying graph, every edge positive.
    pub fn all_positive(&self) -> SignedGraph {
        let edges = self.edges.iter().map(|e| Edge { sign: Sign::Plus, ..*e }).collect();
        Self::from_sorted(self.n, edges)
    }

    /// Same underlying graph, signs replaced by `signs` (edge order).
    pub fn with_signs(&self, signs: &[Sign]) -> SignedGraph {
        assert_eq!(signs.len(), self.edges.len());
        let edges = self
            .edges
            .iter()
            .zip(signs)
            .map(|(e, &sign)| Edge { sign, ..*e })
            .collect();
        Self::from_sorted(self.n, edges)
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.edges.iter().map(|e| e.sign).collect()
    }

    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.edges.iter().zip(&other.edges).all(|(a, b)| (a.u, a.v) == (b.u, b.v))
    }

    /// Connected-component id of every vertex, ids numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &(y, _) in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().iter().all(|&c| c == 0)
    }

    /// `4|V| - 3|E|`.
    pub fn potential(&self) -> i64 {
        4 * self.n as i64 - 3 * self.edges.len() as i64
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }
}

/// `4|V| - 3|E|` of `g`.
pub fn potential(g: &SignedGraph) -> i64 {
    g.potential()
}

/// A vertex subset at which a switching is applied. Switching at `X` and at
/// its complement produce the same signature.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SwitchSet {
    members: Vec<Vertex>,
}

impl SwitchSet {
    pub fn new(members: impl IntoIterator<Item = Vertex>) -> SwitchSet {
        let mut members: Vec<_> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        SwitchSet { members }
    }

    pub fn empty() -> SwitchSet {
        SwitchSet::default()
    }

    pub fn from_mask(mask: &[bool]) -> SwitchSet {
        SwitchSet { members: (0..mask.len()).filter(|&v| mask[v]).collect() }
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.members {
            if v < n {
                m[v] = true;
            }
        }
        m
    }

    pub fn complement(&self, n: usize) -> SwitchSet {
        let mask = self.mask(n);
        SwitchSet { members: (0..n).filter(|&v| !mask[v]).collect() }
    }

    /// Symmetric difference: switching at `X` then at `Y` equals switching at `X ^ Y`.
    pub fn compose(&self, other: &SwitchSet) -> SwitchSet {
        let mut out = Vec::new();
        let (a, b) = (&self.members, &other.members);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) if x == y => {
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    out.push(*x);
                    i += 1;
                }
                (Some(_), Some(y)) => {
                    out.push(*y);
                    j += 1;
                }
                (Some(x), None) => {
                    out.push(*x);
                    i += 1;
                }
                (None, Some(y)) => {
                    out.push(*y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SwitchSet { members: out }
    }
}

/// A signed multigraph: loops forbidden, a pair may carry two parallel edges
/// of opposite signs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedMultiGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl fmt::Debug for SignedMultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedMultiGraph(n={}; ", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign, e.v)?;
        }
        write!(f, ")")
    }
}

impl SignedMultiGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<SignedMultiGraph>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Sign)>,
    {
        let mut list = Vec::new();
        for (u, v, sign) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let (u, v) = orient(u, v);
            list.push(Edge { u, v, sign });
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if (w[0].u, w[0].v) == (w[1].u, w[1].v) && w[0].sign == w[1].sign {
                return Err(Error::BadParallelPair(w[0].u, w[0].v));
            }
        }
        for w in list.windows(3) {
            if (w[0].u, w[0].v) == (w[2].u, w[2].v) {
                return Err(Error::BadParallelPair(w[0].u, w[0].v));
            }
        }
        Ok(SignedMultiGraph { n, edges: list })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| (w[0].u, w[0].v) != (w[1].u, w[1].v))
    }

    /// The simple graph, if no pair is doubled.
    pub fn to_simple(&self) -> Option<SignedGraph> {
        self.is_simple().then(|| SignedGraph::from_sorted(self.n, self.edges.clone()))
    }
}

impl From<&SignedGraph> for SignedMultiGraph {
    fn from(g: &SignedGraph) -> Self {
        SignedMultiGraph { n: g.n, edges: g.edges.clone() }
    }
}
