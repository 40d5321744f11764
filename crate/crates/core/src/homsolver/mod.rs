//! Homomorphisms of signed graphs, with certificates.
//!
//! A homomorphism of `(G, σ)` to `(H, π)` is a switching of `G` (the switch
//! set) followed by an edge-sign preserving vertex map. Switching at `X` and
//! at `V \ X` give the same homomorphism.

mod c4;
mod csp;
mod sp;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sgraph::{ParityClass, Sign, SignedGraph, SwitchSet, Vertex};

pub use c4::hom_c4;
pub use csp::{hom_to_target, DEFAULT_BUDGET};
pub use sp::sp_hom_c4;

/// The negative four-cycle `u1 u2 u3 u4` as vertices `0..4`, with `u4 u1` negative.
pub fn c_minus_4() -> SignedGraph {
    SignedGraph::new(4, [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (2, 3, Sign::Plus), (0, 3, Sign::Minus)])
        .expect("static graph")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Homomorphism {
    pub switch: SwitchSet,
    pub map: Vec<Vertex>,
}

impl Homomorphism {
    /// The same mapping written with the complementary switch set.
    pub fn complemented(&self) -> Homomorphism {
        Homomorphism { switch: self.switch.complement(self.map.len()), map: self.map.clone() }
    }
}

/// A path with edge signs `(-, +, -)`, as vertex pairs `[a,u], [u,v], [v,b]`.
/// Its presence rules out an edge-sign preserving map to the negative four-cycle.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpWitness {
    pub path: [[Vertex; 2]; 3],
}

impl SpWitness {
    pub fn vertices(&self) -> [Vertex; 4] {
        [self.path[0][0], self.path[0][1], self.path[1][1], self.path[2][1]]
    }

    /// True when the three edges are present in `g` with signs `-, +, -`.
    pub fn holds_in(&self, g: &SignedGraph) -> bool {
        let [a, u, v, b] = self.vertices();
        let consistent = self.path[1][0] == u && self.path[2][0] == v;
        consistent
            && g.sign_of(a, u) == Some(Sign::Minus)
            && g.sign_of(u, v) == Some(Sign::Plus)
            && g.sign_of(v, b) == Some(Sign::Minus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoHomReason {
    Witness(SpWitness),
    GirthViolation(ParityClass),
    ExhaustedSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomVerdict {
    Mapped(Homomorphism),
    NoHom(NoHomReason),
}

impl HomVerdict {
    pub fn is_mapped(&self) -> bool {
        matches!(self, HomVerdict::Mapped(_))
    }

    pub fn homomorphism(&self) -> Option<&Homomorphism> {
        match self {
            HomVerdict::Mapped(h) => Some(h),
            HomVerdict::NoHom(_) => None,
        }
    }
}

impl Serialize for HomVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HomVerdict::Mapped(h) => {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("verdict", "mapped")?;
                m.serialize_entry("switch", h.switch.members())?;
                m.serialize_entry("map", &h.map)?;
                m.end()
            }
            HomVerdict::NoHom(NoHomReason::Witness(w)) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("verdict", "nohom")?;
                m.serialize_entry("witness", w)?;
                m.end()
            }
            HomVerdict::NoHom(NoHomReason::ExhaustedSearch) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("verdict", "nohom")?;
                m.serialize_entry("reason", "exhausted")?;
                m.end()
            }
            HomVerdict::NoHom(NoHomReason::GirthViolation(c)) => {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("verdict", "nohom")?;
                m.serialize_entry("reason", "girth")?;
                m.serialize_entry("class", c)?;
                m.end()
            }
        }
    }
}

/// Checks that `phi` is a homomorphism of `g` to `h`: after switching `g` at
/// `phi.switch`, every edge `uv` of sign `s` lands on an edge
/// `phi(u) phi(v)` of `h` with the same sign.
pub fn verify_hom(g: &SignedGraph, h: &SignedGraph, phi: &Homomorphism) -> Result<bool> {
    if phi.map.len() != g.n() {
        return Err(Error::BadParameter(format!(
            "map covers {} vertices, graph has {}",
            phi.map.len(),
            g.n()
        )));
    }
    for &v in phi.switch.members() {
        g.check_vertex(v)?;
    }
    for &t in &phi.map {
        h.check_vertex(t)?;
    }
    let mask = phi.switch.mask(g.n());
    Ok(g.edges().iter().all(|e| {
        let s = if mask[e.u] != mask[e.v] { -e.sign } else { e.sign };
        h.sign_of(phi.map[e.u], phi.map[e.v]) == Some(s)
    }))
}
