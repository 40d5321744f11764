use super::{Edge, Sign, SignedGraph, SwitchSet, Vertex};
use crate::error::Result;

/// Negates every edge with exactly one endpoint in `x`.
pub fn switch(g: &SignedGraph, x: &SwitchSet) -> Result<SignedGraph> {
    for &v in x.members() {
        g.check_vertex(v)?;
    }
    let mask = x.mask(g.n());
    Ok(switch_by_mask(g, &mask))
}

pub(crate) fn switch_by_mask(g: &SignedGraph, mask: &[bool]) -> SignedGraph {
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            let sign = if mask[e.u] != mask[e.v] { -e.sign } else { e.sign };
            Edge { sign, ..*e }
        })
        .collect();
    SignedGraph::from_sorted(g.n(), edges)
}

/// Propagates a sign label along a spanning forest; returns the label vector
/// (`true` = switch here) when every non-tree edge agrees with it.
pub(crate) fn balancing_labels(g: &SignedGraph) -> Option<Vec<bool>> {
    let n = g.n();
    let mut label: Vec<Option<bool>> = vec![None; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if label[root].is_some() {
            continue;
        }
        label[root] = Some(false);
        stack.push(root);
        while let Some(x) = stack.pop() {
            let lx = label[x].unwrap();
            for &(y, s) in g.neighbors(x) {
                // switching at y iff the edge would otherwise stay negative
                let want = lx != s.is_negative();
                match label[y] {
                    None => {
                        label[y] = Some(want);
                        stack.push(y);
                    }
                    Some(ly) if ly != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(label.into_iter().map(Option::unwrap).collect())
}

/// A switching that makes every edge positive, or `None` if some cycle is negative.
pub fn is_balanced(g: &SignedGraph) -> Option<SwitchSet> {
    balancing_labels(g).map(|l| SwitchSet::from_mask(&l))
}

/// True iff both graphs share the underlying edge set and their product
/// signature is balanced.
pub fn switching_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> bool {
    if !g1.same_underlying(g2) {
        return false;
    }
    let signs: Vec<Sign> = g1.edges().iter().zip(g2.edges()).map(|(a, b)| a.sign * b.sign).collect();
    balancing_labels(&g1.with_signs(&signs)).is_some()
}

/// 2-coloring of the underlying graph; the smallest vertex of every component
/// goes to the first side.
pub fn bipartition(g: &SignedGraph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let side = bipartition_sides(g)?;
    let a = (0..g.n()).filter(|&v| !side[v]).collect();
    let b = (0..g.n()).filter(|&v| side[v]).collect();
    Some((a, b))
}

/// Side flag per vertex (`false` = first side).
pub(crate) fn bipartition_sides(g: &SignedGraph) -> Option<Vec<bool>> {
    let all_neg = g.with_signs(&vec![Sign::Minus; g.edge_count()]);
    balancing_labels(&all_neg)
}
