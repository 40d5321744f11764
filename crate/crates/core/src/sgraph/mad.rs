use std::collections::VecDeque;

use num_rational::Ratio;

use super::SignedGraph;
use crate::error::{Error, Result};

/// Largest order handled by subset enumeration.
const SUBSET_LIMIT: usize = 20;

/// Maximum average degree over all nonempty subgraphs, exactly.
pub fn max_average_degree(g: &SignedGraph) -> Result<Ratio<i64>> {
    if g.n() <= SUBSET_LIMIT {
        mad_by_subsets(g)
    } else {
        mad_by_flow(g)
    }
}

/// Enumerates every vertex subset; the densest subgraph on a subset is the
/// induced one. Panics above 26 vertices.
pub fn mad_by_subsets(g: &SignedGraph) -> Result<Ratio<i64>> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    assert!(n <= 26, "subset enumeration is limited to 26 vertices");
    let mut adj = vec![0u32; n];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    let total = 1usize << n;
    let mut inside = vec![0u16; total];
    let mut best = Ratio::from_integer(0);
    for mask in 1..total {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        inside[mask] = inside[rest] + (adj[v] & rest as u32).count_ones() as u16;
        let d = Ratio::new(2 * inside[mask] as i64, mask.count_ones() as i64);
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

/// Densest-subgraph search: binary search over the finitely many candidate
/// densities `e/v`, each step a max-flow feasibility test.
pub fn mad_by_flow(g: &SignedGraph) -> Result<Ratio<i64>> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = g.edge_count();
    let mut candidates = Vec::new();
    for v in 1..=n as i64 {
        let cap = (v * (v - 1) / 2).min(m as i64);
        for e in 0..=cap {
            candidates.push(Ratio::new(e, v));
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    // first candidate that no subgraph strictly exceeds
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if denser_than(g, candidates[mid]) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Ok(candidates[lo] * 2)
}

/// Is there a subgraph with `|E|/|V| > p/q`? Max closure on the edge-vertex
/// incidence network: source -> edge (q), edge -> endpoints (inf), vertex -> sink (p).
fn denser_than(g: &SignedGraph, density: Ratio<i64>) -> bool {
    let (p, q) = (*density.numer(), *density.denom());
    let n = g.n();
    let m = g.edge_count();
    let source = n + m;
    let sink = source + 1;
    let mut net = Dinic::new(n + m + 2);
    let inf = i64::MAX / 4;
    for (i, e) in g.edges().iter().enumerate() {
        net.add_edge(source, n + i, q);
        net.add_edge(n + i, e.u, inf);
        net.add_edge(n + i, e.v, inf);
    }
    for v in 0..n {
        net.add_edge(v, sink, p);
    }
    let flow = net.max_flow(source, sink);
    q * m as i64 - flow > 0
}

struct Dinic {
    graph: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic { graph: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new(), level: vec![0; n], iter: vec![0; n] }
    }

    fn add_edge(&mut self, a: usize, b: usize, c: i64) {
        self.graph[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.graph[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &id in &self.graph[x] {
                let y = self.to[id];
                if self.cap[id] > 0 && self.level[y] < 0 {
                    self.level[y] = self.level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }

    fn dfs(&mut self, x: usize, t: usize, f: i64) -> i64 {
        if x == t {
            return f;
        }
        while self.iter[x] < self.graph[x].len() {
            let id = self.graph[x][self.iter[x]];
            let y = self.to[id];
            if self.cap[id] > 0 && self.level[x] < self.level[y] {
                let d = self.dfs(y, t, f.min(self.cap[id]));
                if d > 0 {
                    self.cap[id] -= d;
                    self.cap[id ^ 1] += d;
                    return d;
                }
            }
            self.iter[x] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return flow;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }
}
