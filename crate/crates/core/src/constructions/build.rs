use super::ops::{align_edge_sign, hajos_h_unchecked, splice_f_unchecked};
use super::{gallery, GalleryId};
use crate::error::{Error, Result};
use crate::sgraph::{Sign, SignedGraph};

/// Joins `g1` and `g2` on their first edges, switching each so the first
/// edge of `g1` is positive and that of `g2` negative.
fn join(g1: &SignedGraph, g2: &SignedGraph) -> Result<SignedGraph> {
    let e1 = g1.edges()[0];
    let e2 = g2.edges()[0];
    let a = align_edge_sign(g1, e1.u, e1.v, Sign::Plus)?;
    let b = align_edge_sign(g2, e2.u, e2.v, Sign::Minus)?;
    hajos_h_unchecked(&a, (e1.u, e1.v), &b, (e2.u, e2.v))
}

fn g_hat(order: usize) -> Result<SignedGraph> {
    debug_assert_eq!(order % 6, 3);
    gallery(GalleryId::G2k1((order - 3) / 6))
}

/// A critical signed graph on `n >= 9` vertices with `ceil(4n/3)` or
/// `ceil(4n/3) + 1` edges.
///
/// Orders `9..=12` use fixed graphs. Above that the residue of `n` mod 6
/// picks a base `T_2` odd-cycle graph and how many small graphs are joined
/// onto it, chosen so the edge count stays in the window.
pub fn build_critical(n: usize) -> Result<SignedGraph> {
    if n < 9 {
        return Err(Error::BadParameter(format!("critical graphs are built from order 9, got {n}")));
    }
    let gamma = gallery(GalleryId::Gamma)?;
    let w_hat = gallery(GalleryId::WHat)?;
    match n {
        9 => return g_hat(9),
        10 => return join(&gamma, &gamma),
        11 => return join(&gamma, &w_hat),
        12 => return splice_f_unchecked(&w_hat, 1, &w_hat, 1),
        _ => {}
    }
    match n % 6 {
        3 => g_hat(n),
        1 => join(&g_hat(n - 4)?, &gamma),
        2 => gallery(GalleryId::GPrime2k1((n - 2) / 6)),
        4 => join(&g_hat(n - 7)?, &g_hat(9)?),
        5 => join(&join(&g_hat(n - 8)?, &gamma)?, &gamma),
        _ => join(&g_hat(n - 9)?, &join(&gamma, &w_hat)?),
    }
}
