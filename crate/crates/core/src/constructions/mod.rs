//! Named signed graphs and the operations that build critical graphs from
//! smaller ones.

mod build;
mod classic;
mod ops;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sgraph::{Sign, SignedGraph, Vertex};

pub use build::build_critical;
pub use classic::{complete, complete_bipartite, cycle, path, petersen, wheel};
pub use ops::{align_edge_sign, hajos_h, identify, p2_extend, splice_f, t_subdivide, t_subdivide_multi, tilde};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum GalleryId {
    Gamma,
    WHat,
    Omega1,
    Omega2,
    Theta1,
    Theta2,
    DualPath,
    CMinus(usize),
    CPlus(usize),
    /// `T_2` of the doubled odd cycle of length `2k + 1`.
    G2k1(usize),
    /// [`GalleryId::G2k1`] with two degree-two vertices identified.
    GPrime2k1(usize),
}

impl GalleryId {
    pub const FIXED: [GalleryId; 7] = [
        GalleryId::Gamma,
        GalleryId::WHat,
        GalleryId::Omega1,
        GalleryId::Omega2,
        GalleryId::Theta1,
        GalleryId::Theta2,
        GalleryId::DualPath,
    ];
}

impl fmt::Display for GalleryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id = match self {
            GalleryId::Gamma => "gamma".to_string(),
            GalleryId::WHat => "what".to_string(),
            GalleryId::Omega1 => "omega1".to_string(),
            GalleryId::Omega2 => "omega2".to_string(),
            GalleryId::Theta1 => "theta1".to_string(),
            GalleryId::Theta2 => "theta2".to_string(),
            GalleryId::DualPath => "dualpath".to_string(),
            GalleryId::CMinus(l) => format!("cminus:{l}"),
            GalleryId::CPlus(l) => format!("cplus:{l}"),
            GalleryId::G2k1(k) => format!("g2k1:{k}"),
            GalleryId::GPrime2k1(k) => format!("gprime:{k}"),
        };
        f.pad(&id)
    }
}

impl FromStr for GalleryId {
    type Err = Error;

    fn from_str(s: &str) -> Result<GalleryId> {
        let fixed = match s {
            "gamma" => Some(GalleryId::Gamma),
            "what" => Some(GalleryId::WHat),
            "omega1" => Some(GalleryId::Omega1),
            "omega2" => Some(GalleryId::Omega2),
            "theta1" => Some(GalleryId::Theta1),
            "theta2" => Some(GalleryId::Theta2),
            "dualpath" => Some(GalleryId::DualPath),
            _ => None,
        };
        if let Some(id) = fixed {
            return Ok(id);
        }
        let bad = || Error::BadParameter(format!("unknown gallery id `{s}`"));
        let (tag, arg) = s.split_once(':').ok_or_else(bad)?;
        let arg: usize = arg.parse().map_err(|_| bad())?;
        match tag {
            "cminus" => Ok(GalleryId::CMinus(arg)),
            "cplus" => Ok(GalleryId::CPlus(arg)),
            "g2k1" => Ok(GalleryId::G2k1(arg)),
            "gprime" => Ok(GalleryId::GPrime2k1(arg)),
            _ => Err(bad()),
        }
    }
}

fn signed(n: usize, plus: &[(Vertex, Vertex)], minus: &[(Vertex, Vertex)]) -> SignedGraph {
    let edges = plus
        .iter()
        .map(|&(u, v)| (u, v, Sign::Plus))
        .chain(minus.iter().map(|&(u, v)| (u, v, Sign::Minus)));
    SignedGraph::new(n, edges).expect("static graph")
}

/// The graph `K4` on `a b c d` (ids 0..4) with `ab` subdivided by `p` (4)
/// and `cd` by `q` (5); `pb` and `qd` negative.
fn gamma() -> SignedGraph {
    let (a, b, c, d, p, q) = (0, 1, 2, 3, 4, 5);
    signed(6, &[(a, p), (c, q), (a, c), (a, d), (b, c), (b, d)], &[(p, b), (q, d)])
}

/// `x1..x4` are 0..4, `y1..y3` are 4..7.
fn w_hat() -> SignedGraph {
    let (x1, x2, x3, x4, y1, y2, y3) = (0, 1, 2, 3, 4, 5, 6);
    signed(7, &[(x1, y1), (x1, y2), (x1, y3), (x2, y2), (x3, y3), (x4, y1)], &[(x2, y1), (x3, y2), (x4, y3)])
}

/// `x0..x4` are 0..5, `y0..y3` are 5..9.
fn omega(which: u8) -> SignedGraph {
    let x = |i: usize| i;
    let y = |i: usize| 5 + i;
    if which == 1 {
        signed(
            9,
            &[(x(0), y(0)), (x(1), y(0)), (x(1), y(1)), (x(1), y(2)), (x(2), y(1)), (x(3), y(2)), (x(3), y(3)), (x(4), y(1)), (x(4), y(3))],
            &[(x(2), y(2)), (x(0), y(3))],
        )
    } else {
        signed(
            9,
            &[(x(0), y(0)), (x(0), y(1)), (x(1), y(1)), (x(1), y(3)), (x(2), y(1)), (x(2), y(2)), (x(3), y(2)), (x(3), y(3)), (x(4), y(3))],
            &[(x(4), y(0)), (x(1), y(2))],
        )
    }
}

fn signed_cycle(l: usize, sign_of_last: Sign) -> Result<SignedGraph> {
    if l < 4 || l % 2 == 1 {
        return Err(Error::BadParameter(format!("cycle length {l} must be even and at least 4")));
    }
    let edges = (0..l).map(|i| (i, (i + 1) % l, if i == l - 1 { sign_of_last } else { Sign::Plus }));
    SignedGraph::new(l, edges)
}

fn g2k1(k: usize) -> Result<SignedGraph> {
    if k == 0 {
        return Err(Error::BadParameter("g2k1 needs k >= 1".into()));
    }
    t_subdivide_multi(&tilde(&cycle(2 * k + 1)?), 2)
}

/// Identifies the midpoints of the positive threads over cycle edges `01`
/// and `12`: both are degree two, at distance two through vertex 1.
fn g_prime(k: usize) -> Result<SignedGraph> {
    if k < 2 {
        return Err(Error::BadParameter("gprime needs k >= 2".into()));
    }
    let g = g2k1(k)?;
    let base = 2 * k + 1;
    let positive_mid = |a: Vertex, b: Vertex| {
        (base..g.n())
            .find(|&m| g.sign_of(m, a) == Some(Sign::Plus) && g.sign_of(m, b) == Some(Sign::Plus))
            .expect("every doubled edge has a positive thread")
    };
    identify(&g, positive_mid(0, 1), positive_mid(1, 2))
}

pub fn gallery(id: GalleryId) -> Result<SignedGraph> {
    Ok(match id {
        GalleryId::Gamma => gamma(),
        GalleryId::WHat => w_hat(),
        GalleryId::Omega1 => omega(1),
        GalleryId::Omega2 => omega(2),
        GalleryId::Theta1 => SignedGraph::unsigned(5, [(2, 1), (1, 4), (2, 3), (3, 4), (2, 0), (0, 4)])?,
        GalleryId::Theta2 => SignedGraph::unsigned(6, [(2, 5), (0, 1), (3, 4), (1, 2), (0, 5), (2, 3), (4, 5)])?,
        GalleryId::DualPath => signed(4, &[(1, 2)], &[(0, 1), (2, 3)]),
        GalleryId::CMinus(l) => signed_cycle(l, Sign::Minus)?,
        GalleryId::CPlus(l) => signed_cycle(l, Sign::Plus)?,
        GalleryId::G2k1(k) => g2k1(k)?,
        GalleryId::GPrime2k1(k) => g_prime(k)?,
    })
}
