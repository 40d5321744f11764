use super::{HomVerdict, Homomorphism, NoHomReason, SpWitness};
use crate::error::{Error, Result};
use crate::sgraph::{switching::bipartition_sides, SignedGraph, SwitchSet};

/// Edge-sign preserving homomorphism to the negative four-cycle for a fixed
/// signature.
///
/// A map exists exactly when no positive edge has a negative edge at each of
/// its ends. If such an edge exists it is returned as the witness; otherwise
/// the map is built from the bipartition: a first-side vertex goes to `u1`
/// when it meets a negative edge and to `u3` otherwise, a second-side vertex
/// to `u4` or `u2` by the same test.
pub fn sp_hom_c4(g: &SignedGraph) -> Result<HomVerdict> {
    let side = bipartition_sides(g).ok_or(Error::NotBipartite)?;
    let negative_neighbor: Vec<Option<usize>> = (0..g.n())
        .map(|v| g.neighbors(v).iter().find(|(_, s)| s.is_negative()).map(|&(w, _)| w))
        .collect();
    for e in g.edges() {
        if e.sign.is_negative() {
            continue;
        }
        if let (Some(a), Some(b)) = (negative_neighbor[e.u], negative_neighbor[e.v]) {
            return Ok(HomVerdict::NoHom(NoHomReason::Witness(SpWitness {
                path: [[a, e.u], [e.u, e.v], [e.v, b]],
            })));
        }
    }
    let map = (0..g.n())
        .map(|v| match (side[v], negative_neighbor[v].is_some()) {
            (false, true) => 0,
            (false, false) => 2,
            (true, true) => 3,
            (true, false) => 1,
        })
        .collect();
    Ok(HomVerdict::Mapped(Homomorphism { switch: SwitchSet::empty(), map }))
}
