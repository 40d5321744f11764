//! Proper colourings, `X_2k`-colourings of signed multigraphs, and the
//! four-colouring bridge through the negative four-cycle.

use serde::Serialize;

use crate::constructions::t_subdivide;
use crate::homsolver::{hom_c4, HomVerdict, Homomorphism};
use crate::sgraph::{SignedGraph, SignedMultiGraph, Vertex};

struct Colorer<'a> {
    g: &'a SignedGraph,
    k: usize,
    color: Vec<Option<usize>>,
}

impl Colorer<'_> {
    /// Most constrained uncoloured vertex: most distinct neighbour colours,
    /// then highest degree.
    fn pick(&self) -> Option<Vertex> {
        (0..self.g.n()).filter(|&v| self.color[v].is_none()).max_by_key(|&v| {
            let mut seen: Vec<usize> = self.g.neighbors(v).iter().filter_map(|&(w, _)| self.color[w]).collect();
            seen.sort_unstable();
            seen.dedup();
            (seen.len(), self.g.degree(v), std::cmp::Reverse(v))
        })
    }

    fn search(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else { return true };
        // a fresh colour is interchangeable with any other unused one
        for c in 0..self.k.min(used + 1) {
            if self.g.neighbors(v).iter().any(|&(w, _)| self.color[w] == Some(c)) {
                continue;
            }
            self.color[v] = Some(c);
            if self.search(used.max(c + 1)) {
                return true;
            }
        }
        self.color[v] = None;
        false
    }
}

/// A proper colouring of the underlying graph with colours `0..k`, if one
/// exists. Edge signs are ignored.
pub fn k_coloring(g: &SignedGraph, k: usize) -> Option<Vec<usize>> {
    let mut c = Colorer { g, k, color: vec![None; g.n()] };
    c.search(0).then(|| c.color.into_iter().map(Option::unwrap).collect())
}

pub fn is_proper_coloring(g: &SignedGraph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|e| colors[e.u] != colors[e.v])
}

/// Colours in `{±1, …, ±k}` with `c(x) != sign(e) c(y)` on every edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct XColoring {
    pub colors: Vec<i32>,
}

impl XColoring {
    pub fn is_valid(&self, g: &SignedMultiGraph, k: usize) -> bool {
        let k = k as i32;
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c != 0 && c.abs() <= k)
            && g.edges().iter().all(|e| self.colors[e.u] != e.sign.as_i32() * self.colors[e.v])
    }
}

struct XSearch {
    adj: Vec<Vec<(Vertex, i32)>>,
    order: Vec<Vertex>,
    first_in_component: Vec<bool>,
    k: i32,
    color: Vec<i32>,
}

impl XSearch {
    fn search(&mut self, idx: usize) -> bool {
        let Some(&v) = self.order.get(idx) else { return true };
        let candidates: Vec<i32> = if self.first_in_component[v] {
            (1..=self.k).collect()
        } else {
            (1..=self.k).flat_map(|c| [c, -c]).collect()
        };
        for c in candidates {
            if self.adj[v].iter().any(|&(w, s)| self.color[w] != 0 && c == s * self.color[w]) {
                continue;
            }
            self.color[v] = c;
            if self.search(idx + 1) {
                return true;
            }
        }
        self.color[v] = 0;
        false
    }
}

/// Backtracking search for an `X_2k`-colouring. Negating every colour keeps
/// a colouring valid, so the first vertex of each component (in search
/// order) only takes positive colours.
pub fn x2k_coloring(g: &SignedMultiGraph, k: usize) -> Option<XColoring> {
    let n = g.n();
    if k == 0 {
        return (n == 0).then(|| XColoring { colors: Vec::new() });
    }
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.u].push((e.v, e.sign.as_i32()));
        adj[e.v].push((e.u, e.sign.as_i32()));
    }
    // breadth-first order keeps each new vertex attached to coloured ones
    let mut order = Vec::with_capacity(n);
    let mut first_in_component = vec![false; n];
    let mut seen = vec![false; n];
    let mut roots: Vec<Vertex> = (0..n).collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        first_in_component[r] = true;
        let start = order.len();
        order.push(r);
        let mut i = start;
        while i < order.len() {
            let x = order[i];
            for &(y, _) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
            i += 1;
        }
    }
    let mut s = XSearch { adj, order, first_in_component, k: k as i32, color: vec![0; n] };
    s.search(0).then_some(XColoring { colors: s.color })
}

/// Rotates the part of `phi` on `members` by one step of the negative
/// four-cycle, `u_i -> u_{i+1}`. The rotation is a switching automorphism:
/// vertices arriving at `u1` change switch bit.
fn rotate(phi: &mut (Vec<bool>, Vec<Vertex>), members: &[Vertex]) {
    for &v in members {
        phi.1[v] = (phi.1[v] + 1) % 4;
        if phi.1[v] == 0 {
            phi.0[v] = !phi.0[v];
        }
    }
}

/// A four-colouring of the underlying graph of `g`, obtained from a map of
/// `T_2(G, +)` to the negative four-cycle. Each original vertex is sent to
/// `u1` or `u3` (rotating components where needed) and coloured by its
/// (switch bit, target) pair. `None` exactly when no four-colouring exists.
pub fn four_color_via_c4(g: &SignedGraph) -> Option<Vec<usize>> {
    let t = t_subdivide(&g.all_positive(), 2).expect("length 2 is valid");
    let phi: Homomorphism = match hom_c4(&t) {
        HomVerdict::Mapped(phi) => phi,
        HomVerdict::NoHom(_) => return None,
    };
    let mut state = (phi.switch.mask(t.n()), phi.map);
    let comp = t.components();
    let mut members = vec![Vec::new(); t.n()];
    for v in 0..t.n() {
        members[comp[v]].push(v);
    }
    for list in &members {
        if let Some(&first) = list.first() {
            if first < g.n() && state.1[first] % 2 == 1 {
                rotate(&mut state, list);
            }
        }
    }
    debug_assert!(crate::homsolver::verify_hom(
        &t,
        &crate::homsolver::c_minus_4(),
        &Homomorphism { switch: crate::sgraph::SwitchSet::from_mask(&state.0), map: state.1.clone() }
    )
    .unwrap());
    let colors: Vec<usize> = (0..g.n())
        .map(|v| {
            debug_assert!(state.1[v].is_multiple_of(2));
            2 * state.0[v] as usize + state.1[v] / 2
        })
        .collect();
    assert!(is_proper_coloring(g, &colors), "decoded colouring is not proper");
    Some(colors)
}
