//! Exact maximum average degree.

use sigcrit::constructions::{gallery, GalleryId};
use sigcrit::sgraph::{mad_by_flow, max_average_degree};

fn main() -> sigcrit::Result<()> {
    for id in [GalleryId::WHat, GalleryId::Gamma, GalleryId::GPrime2k1(2), GalleryId::G2k1(3)] {
        let g = gallery(id)?;
        let m = max_average_degree(&g)?;
        assert_eq!(m, mad_by_flow(&g)?);
        println!("{id:>8}: mad {m} ({:.4})", *m.numer() as f64 / *m.denom() as f64);
    }
    Ok(())
}
