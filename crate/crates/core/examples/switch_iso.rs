//! Switching isomorphism and switching subgraphs.

use sigcrit::constructions::{gallery, GalleryId};
use sigcrit::sgraph::{find_switching_subgraph, switch, switching_isomorphic, SwitchSet};

fn main() -> sigcrit::Result<()> {
    let w = gallery(GalleryId::WHat)?;
    let scrambled = switch(&w.relabel(&[6, 5, 4, 3, 2, 1, 0]), &SwitchSet::new([0, 2]))?;
    println!("W-hat vs scrambled copy: {:?}", switching_isomorphic(&w, &scrambled));
    let (o1, o2) = (gallery(GalleryId::Omega1)?, gallery(GalleryId::Omega2)?);
    println!("Omega1 vs Omega2: {:?}", switching_isomorphic(&o1, &o2));
    let c4 = gallery(GalleryId::CMinus(4))?;
    println!("negative 4-cycle inside W-hat: {:?}", find_switching_subgraph(&w, &c4));
    Ok(())
}
