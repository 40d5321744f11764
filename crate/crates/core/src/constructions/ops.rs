use crate::criticality::is_critical_c4;
use crate::error::{Error, Result};
use crate::homsolver::{hom_c4, HomVerdict};
use crate::sgraph::{switch, Edge, Sign, SignedGraph, SignedMultiGraph, SwitchSet, Vertex};

fn subdivide_edges(n: usize, edges: &[Edge], l: usize) -> Result<SignedGraph> {
    if l == 0 {
        return Err(Error::BadParameter("path length must be at least 1".into()));
    }
    let fresh = l - 1;
    let mut out = Vec::with_capacity(edges.len() * l);
    for (i, e) in edges.iter().enumerate() {
        let mut chain = Vec::with_capacity(l + 1);
        chain.push(e.u);
        chain.extend((0..fresh).map(|j| n + i * fresh + j));
        chain.push(e.v);
        for (k, w) in chain.windows(2).enumerate() {
            let sign = if k == 0 { -e.sign } else { Sign::Plus };
            out.push(Edge { u: w[0], v: w[1], sign });
        }
    }
    Ok(SignedGraph::from_unsorted(n + edges.len() * fresh, out))
}

/// `T_l`: every edge `uv` becomes a path of `l` edges through new vertices
/// whose sign is `-sign(uv)`. The first path edge (at the smaller endpoint)
/// carries that sign, the others are positive. The new vertices of edge `i`
/// are `n + i*(l-1) ..`.
pub fn t_subdivide(g: &SignedGraph, l: usize) -> Result<SignedGraph> {
    subdivide_edges(g.n(), g.edges(), l)
}

/// [`t_subdivide`] on a multigraph. Parallel edges become internally
/// disjoint paths, so `l = 1` is rejected whenever a pair is doubled.
pub fn t_subdivide_multi(g: &SignedMultiGraph, l: usize) -> Result<SignedGraph> {
    if l == 1 && !g.is_simple() {
        return Err(Error::SimplicityViolated);
    }
    subdivide_edges(g.n(), g.edges(), l)
}

/// Doubles every edge into a positive and a negative copy. Input signs are ignored.
pub fn tilde(g: &SignedGraph) -> SignedMultiGraph {
    let pairs = g.edges().iter().flat_map(|e| [(e.u, e.v, Sign::Plus), (e.u, e.v, Sign::Minus)]);
    SignedMultiGraph::new(g.n(), pairs).expect("one pair per simple edge")
}

/// Adds a new vertex `n` joined to `a` with `s1` and to `b` with `s2`.
pub fn p2_extend(h: &SignedGraph, a: Vertex, b: Vertex, s1: Sign, s2: Sign) -> Result<SignedGraph> {
    h.check_vertex(a)?;
    h.check_vertex(b)?;
    if a == b {
        return Err(Error::BadParameter(format!("extension endpoints coincide at {a}")));
    }
    let n = h.n();
    let edges = h.edges().iter().copied().chain([Edge { u: a, v: n, sign: s1 }, Edge { u: b, v: n, sign: s2 }]);
    Ok(SignedGraph::from_unsorted(n + 1, edges))
}

/// Merges non-adjacent `a` and `b` into vertex `min(a, b)`; vertices above
/// `max(a, b)` shift down by one. Parallel edges of equal sign collapse;
/// opposite signs are an error.
pub fn identify(g: &SignedGraph, a: Vertex, b: Vertex) -> Result<SignedGraph> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b || g.has_edge(a, b) {
        return Err(Error::PreconditionFailed(format!("cannot identify {a} and {b}: equal or adjacent")));
    }
    let (keep, gone) = if a < b { (a, b) } else { (b, a) };
    let rename = |x: Vertex| match x {
        x if x == gone => keep,
        x if x > gone => x - 1,
        x => x,
    };
    let mut merged: Vec<Edge> = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let (u, v) = (rename(e.u), rename(e.v));
        merged.push(Edge { u: u.min(v), v: u.max(v), sign: e.sign });
    }
    merged.sort_unstable();
    merged.dedup();
    for w in merged.windows(2) {
        if (w[0].u, w[0].v) == (w[1].u, w[1].v) {
            return Err(Error::CreatesNegativeDigon(w[0].u, w[0].v));
        }
    }
    Ok(SignedGraph::from_sorted(g.n() - 1, merged))
}

fn two_neighbors(g: &SignedGraph, u: Vertex) -> Result<(Vertex, Vertex)> {
    g.check_vertex(u)?;
    match g.neighbors(u) {
        [(a, _), (b, _)] => Ok((*a, *b)),
        other => Err(Error::PreconditionFailed(format!("vertex {u} has degree {}, expected 2", other.len()))),
    }
}

/// Switches `g` along a map of `g - u` and checks that the path through `u`
/// came out negative.
fn splice_signature(g: &SignedGraph, u: Vertex) -> Result<SignedGraph> {
    let (a, b) = two_neighbors(g, u)?;
    let phi = match hom_c4(&g.isolate_vertex(u)) {
        HomVerdict::Mapped(phi) => phi,
        HomVerdict::NoHom(_) => {
            return Err(Error::PreconditionFailed(format!("graph minus vertex {u} does not map")));
        }
    };
    let switched = switch(g, &phi.switch)?;
    let sign = switched.sign_of(a, u).unwrap() * switched.sign_of(u, b).unwrap();
    if phi.map[a] != phi.map[b] || sign != Sign::Minus {
        return Err(Error::InternalAssertion(format!("path {a}-{u}-{b} is not negative after switching")));
    }
    Ok(switched)
}

fn require_critical(g: &SignedGraph, which: &str) -> Result<()> {
    if is_critical_c4(g).is_critical() {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(format!("{which} is not critical")))
    }
}

/// The splice `F(G1, G2)` at degree-two vertices `u` of `g1` and `v` of
/// `g2`. Both graphs are first switched so the path through the removed
/// vertex is negative; then `u` and `v` are deleted and `u1 v1` (positive)
/// and `u2 v2` (negative) are added, `u1 < u2` and `v1 < v2` being the
/// neighbours. Vertices of `g1` keep their order and come first.
pub fn splice_f(g1: &SignedGraph, u: Vertex, g2: &SignedGraph, v: Vertex) -> Result<SignedGraph> {
    two_neighbors(g1, u)?;
    two_neighbors(g2, v)?;
    require_critical(g1, "first graph")?;
    require_critical(g2, "second graph")?;
    splice_f_unchecked(g1, u, g2, v)
}

pub(crate) fn splice_f_unchecked(g1: &SignedGraph, u: Vertex, g2: &SignedGraph, v: Vertex) -> Result<SignedGraph> {
    let s1 = splice_signature(g1, u)?;
    let s2 = splice_signature(g2, v)?;
    let (u1, u2) = two_neighbors(g1, u)?;
    let (v1, v2) = two_neighbors(g2, v)?;
    let off = g1.n();
    let joined = s1.disjoint_union(&s2);
    let joined = joined
        .with_edge(u1, v1 + off, Sign::Plus)?
        .with_edge(u2, v2 + off, Sign::Minus)?;
    Ok(joined.remove_vertex(v + off).remove_vertex(u))
}

/// Returns `g`, switched at the smaller endpoint of `uv` if needed, so that
/// `uv` carries `sign`.
pub fn align_edge_sign(g: &SignedGraph, u: Vertex, v: Vertex, sign: Sign) -> Result<SignedGraph> {
    match g.sign_of(u, v) {
        None => Err(Error::PreconditionFailed(format!("{u}-{v} is not an edge"))),
        Some(s) if s == sign => Ok(g.clone()),
        Some(_) => switch(g, &SwitchSet::new([u.min(v)])),
    }
}

/// The Hajós-type join `H(G1, G2)`: delete the positive edge `x1 y1` of
/// `g1` and the negative edge `x2 y2` of `g2`, then identify `x1` with `x2`
/// and `y1` with `y2`. Vertices of `g1` keep their ids; those of `g2` follow
/// in order, without `x2` and `y2`.
pub fn hajos_h(g1: &SignedGraph, e1: (Vertex, Vertex), g2: &SignedGraph, e2: (Vertex, Vertex)) -> Result<SignedGraph> {
    require_critical(g1, "first graph")?;
    require_critical(g2, "second graph")?;
    hajos_h_unchecked(g1, e1, g2, e2)
}

pub(crate) fn hajos_h_unchecked(
    g1: &SignedGraph,
    (x1, y1): (Vertex, Vertex),
    g2: &SignedGraph,
    (x2, y2): (Vertex, Vertex),
) -> Result<SignedGraph> {
    if g1.sign_of(x1, y1) != Some(Sign::Plus) {
        return Err(Error::PreconditionFailed(format!("{x1}-{y1} is not a positive edge of the first graph")));
    }
    if g2.sign_of(x2, y2) != Some(Sign::Minus) {
        return Err(Error::PreconditionFailed(format!("{x2}-{y2} is not a negative edge of the second graph")));
    }
    let n1 = g1.n();
    let mut rename = vec![0; g2.n()];
    let mut next = n1;
    for (w, slot) in rename.iter_mut().enumerate() {
        *slot = if w == x2 {
            x1
        } else if w == y2 {
            y1
        } else {
            next += 1;
            next - 1
        };
    }
    let kept1 = g1.edges().iter().filter(|e| (e.u, e.v) != (x1.min(y1), x1.max(y1))).copied();
    let kept2 = g2
        .edges()
        .iter()
        .filter(|e| (e.u, e.v) != (x2.min(y2), x2.max(y2)))
        .map(|e| (rename[e.u], rename[e.v], e.sign));
    let all: Vec<_> = kept1.map(|e| (e.u, e.v, e.sign)).chain(kept2).collect();
    SignedGraph::new(next, all).map_err(|e| match e {
        Error::DuplicateEdge(a, b) => Error::CreatesNegativeDigon(a, b),
        other => other,
    })
}
