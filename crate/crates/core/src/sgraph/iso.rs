use std::collections::HashMap;

use super::{SignedGraph, Vertex};

/// Joint 1-dimensional colour refinement over several graphs, so that colour
/// ids are comparable between them.
fn joint_refinement(graphs: &[&SignedGraph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs.iter().map(|g| (0..g.n()).map(|v| g.degree(v)).collect()).collect();
    let mut classes = usize::MAX;
    loop {
        let mut sigs: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(graphs.len());
        for (g, col) in graphs.iter().zip(&colors) {
            sigs.push(
                (0..g.n())
                    .map(|v| {
                        let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| col[w]).collect();
                        nb.sort_unstable();
                        (col[v], nb)
                    })
                    .collect(),
            );
        }
        let mut all: Vec<&(usize, Vec<usize>)> = sigs.iter().flatten().collect();
        all.sort();
        all.dedup();
        let rank: HashMap<&(usize, Vec<usize>), usize> = all.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<Vec<usize>> = sigs.iter().map(|gs| gs.iter().map(|s| rank[s]).collect()).collect();
        let count = all.len();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

/// Vertex order in which every vertex after the first of its component has
/// an earlier neighbour; rarer colours first.
fn search_order(g: &SignedGraph, colors: &[usize]) -> Vec<Vertex> {
    let n = g.n();
    let mut freq = HashMap::new();
    for &c in colors {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), freq[&colors[v]], std::cmp::Reverse(g.degree(v)), v))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &(w, _) in g.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

struct Matcher<'a> {
    pattern: &'a SignedGraph,
    host: &'a SignedGraph,
    pattern_colors: Option<&'a [usize]>,
    host_colors: Option<&'a [usize]>,
    induced: bool,
    order: Vec<Vertex>,
    map: Vec<Option<Vertex>>,
    used: Vec<bool>,
    label: Vec<bool>,
}

impl Matcher<'_> {
    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.host.n() {
            if self.used[w] {
                continue;
            }
            match (self.pattern_colors, self.host_colors) {
                (Some(pc), Some(hc)) if pc[v] != hc[w] => continue,
                _ => {}
            }
            if self.host.degree(w) < self.pattern.degree(v) {
                continue;
            }
            if let Some(label) = self.fits(v, w) {
                self.map[v] = Some(w);
                self.used[w] = true;
                self.label[v] = label;
                if self.search(depth + 1) {
                    return true;
                }
                self.map[v] = None;
                self.used[w] = false;
            }
        }
        false
    }

    /// Checks adjacency against mapped vertices and the switching label
    /// forced by the product signature on mapped pattern edges.
    fn fits(&self, v: Vertex, w: Vertex) -> Option<bool> {
        let mut label = None;
        for &(u, s1) in self.pattern.neighbors(v) {
            let Some(fu) = self.map[u] else { continue };
            let s2 = self.host.sign_of(w, fu)?;
            let want = self.label[u] != (s1 * s2).is_negative();
            match label {
                None => label = Some(want),
                Some(l) if l != want => return None,
                _ => {}
            }
        }
        if self.induced {
            // host edges between mapped vertices must come from pattern edges
            for &(fu, _) in self.host.neighbors(w) {
                if let Some(u) = self.map.iter().position(|&m| m == Some(fu)) {
                    if !self.pattern.has_edge(v, u) {
                        return None;
                    }
                }
            }
        }
        Some(label.unwrap_or(false))
    }
}

/// A bijection `f` from `g1` onto `g2` such that `f` maps the underlying
/// graph of `g1` onto that of `g2` and the pulled-back signature is
/// switching equivalent to `g1`'s; `None` when no such bijection exists.
pub fn switching_isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> Option<Vec<Vertex>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let colors = joint_refinement(&[g1, g2]);
    let mut h1 = colors[0].clone();
    let mut h2 = colors[1].clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return None;
    }
    let order = search_order(g1, &colors[0]);
    let mut m = Matcher {
        pattern: g1,
        host: g2,
        pattern_colors: Some(&colors[0]),
        host_colors: Some(&colors[1]),
        induced: true,
        order,
        map: vec![None; g1.n()],
        used: vec![false; g2.n()],
        label: vec![false; g1.n()],
    };
    m.search(0).then(|| m.map.into_iter().map(Option::unwrap).collect())
}

/// An injective map from `pattern` into `host` carrying every pattern edge to
/// a host edge, with the two signatures switching equivalent on the image.
/// Extra host edges among the image are allowed (subgraph, not induced).
pub fn find_switching_subgraph(host: &SignedGraph, pattern: &SignedGraph) -> Option<Vec<Vertex>> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let degrees: Vec<usize> = (0..pattern.n()).map(|v| pattern.degree(v)).collect();
    let order = search_order(pattern, &degrees);
    let mut m = Matcher {
        pattern,
        host,
        pattern_colors: None,
        host_colors: None,
        induced: false,
        order,
        map: vec![None; pattern.n()],
        used: vec![false; host.n()],
        label: vec![false; pattern.n()],
    };
    m.search(0).then(|| m.map.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgraph::{switch, switching_equivalent, Sign, SwitchSet};
    use Sign::{Minus, Plus};

    fn c_minus_4() -> SignedGraph {
        SignedGraph::new(4, [(0, 1, Plus), (1, 2, Plus), (2, 3, Plus), (0, 3, Minus)]).unwrap()
    }

    #[test]
    fn relabelled_and_switched_cycle() {
        let g = c_minus_4();
        let h = switch(&g.relabel(&[2, 0, 3, 1]), &SwitchSet::new([1])).unwrap();
        let f = switching_isomorphic(&g, &h).unwrap();
        assert!(switching_equivalent(&g.relabel(&f), &h));
        assert!(switching_isomorphic(&g, &g.all_positive()).is_none());
    }

    #[test]
    fn subgraph_search_respects_signature() {
        let host = SignedGraph::new(
            5,
            [(0, 1, Plus), (1, 2, Plus), (2, 3, Plus), (0, 3, Minus), (3, 4, Plus), (4, 1, Plus)],
        )
        .unwrap();
        assert!(find_switching_subgraph(&host, &c_minus_4()).is_some());
        assert!(find_switching_subgraph(&host.all_positive(), &c_minus_4()).is_none());
    }
}
