//! The named graphs and the constructions that combine them.

use sigcrit::constructions::*;
use sigcrit::criticality::is_critical_c4;
use sigcrit::sgraph::Sign;

fn main() -> sigcrit::Result<()> {
    for id in GalleryId::FIXED.into_iter().chain([GalleryId::G2k1(2), GalleryId::GPrime2k1(2)]) {
        let g = gallery(id)?;
        println!("{id:>8}: n={:<2} m={:<2} critical={}", g.n(), g.edge_count(), is_critical_c4(&g).is_critical());
    }
    let w = gallery(GalleryId::WHat)?;
    let gamma = gallery(GalleryId::Gamma)?;
    let spliced = splice_f(&w, 1, &w, 1)?;
    println!("splice(W,W): n={} m={}", spliced.n(), spliced.edge_count());
    let g1 = align_edge_sign(&gamma, 0, 2, Sign::Plus)?;
    let g2 = align_edge_sign(&gamma, 0, 2, Sign::Minus)?;
    let joined = hajos_h(&g1, (0, 2), &g2, (0, 2))?;
    println!("hajos(Gamma,Gamma): n={} m={}", joined.n(), joined.edge_count());
    let doubled = tilde(&cycle(5)?);
    let t2 = t_subdivide_multi(&doubled, 2)?;
    print!("T2 of doubled C5:\n{}", t2.to_sg());
    Ok(())
}
