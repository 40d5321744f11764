//! Girth vectors: shortest closed walk in each (sign, length parity) class.

use sigcrit::constructions::{gallery, GalleryId};
use sigcrit::sgraph::{girth_vector, negative_girth};

fn main() -> sigcrit::Result<()> {
    for id in [GalleryId::CMinus(4), GalleryId::Gamma, GalleryId::WHat, GalleryId::Theta1] {
        let g = gallery(id)?;
        println!("{id:>8}: {}  negative girth {:?}", girth_vector(&g), negative_girth(&g));
    }
    let target = girth_vector(&gallery(GalleryId::CMinus(4))?);
    let tri = girth_vector(&sigcrit::constructions::complete(3));
    println!("triangle dominates C-4: {} (first violation {:?})", tri.dominates(&target), tri.first_violation(&target));
    Ok(())
}
