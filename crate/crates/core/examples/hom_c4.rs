//! Deciding homomorphisms to the negative four-cycle, with certificates.

use sigcrit::constructions::{gallery, GalleryId};
use sigcrit::homsolver::{c_minus_4, hom_c4, hom_to_target, sp_hom_c4, verify_hom, DEFAULT_BUDGET};

fn main() -> sigcrit::Result<()> {
    let c4 = c_minus_4();
    for id in [GalleryId::CPlus(6), GalleryId::DualPath, GalleryId::Theta1, GalleryId::Gamma] {
        let g = gallery(id)?;
        let v = hom_c4(&g);
        if let Some(h) = v.homomorphism() {
            assert!(verify_hom(&g, &c4, h)?);
        }
        println!("{id:>9}: {}", serde_json::to_string(&v).unwrap());
    }
    // the fixed-signature test returns a (-,+,-) path when it fails
    let p = gallery(GalleryId::DualPath)?;
    println!("sign-preserving on dualpath: {}", serde_json::to_string(&sp_hom_c4(&p)?).unwrap());
    let six = gallery(GalleryId::CMinus(6))?;
    let v = hom_to_target(&gallery(GalleryId::CMinus(4))?, &six, DEFAULT_BUDGET)?;
    println!("C-4 -> C-6: {}", serde_json::to_string(&v).unwrap());
    Ok(())
}
