//! Criticality certificates and the structural checks.

use sigcrit::constructions::{gallery, GalleryId};
use sigcrit::criticality::{is_critical_c4, structural_check, three_two_vertices};

fn main() -> sigcrit::Result<()> {
    for id in [GalleryId::WHat, GalleryId::Gamma, GalleryId::Theta2, GalleryId::CPlus(4), GalleryId::Omega1] {
        let g = gallery(id)?;
        let v = is_critical_c4(&g);
        println!("{id:>7}: {}", serde_json::to_string(&v).unwrap());
        println!("         structure {}", serde_json::to_string(&structural_check(&g)).unwrap());
        println!("         3-2 vertices {:?}, potential {}", three_two_vertices(&g), g.potential());
    }
    Ok(())
}
