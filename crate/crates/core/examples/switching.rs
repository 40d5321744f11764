//! Switching a signed graph and testing balance and equivalence.

use sigcrit::constructions::{gallery, GalleryId};
use sigcrit::sgraph::{is_balanced, switch, switching_equivalent, SwitchSet};

fn main() -> sigcrit::Result<()> {
    let c4 = gallery(GalleryId::CMinus(4))?;
    let switched = switch(&c4, &SwitchSet::new([0, 1]))?;
    println!("C-4:      {c4:?}");
    println!("at {{0,1}}: {switched:?}");
    println!("equivalent: {}", switching_equivalent(&c4, &switched));
    println!("C-4 balanced: {}", is_balanced(&c4).is_some());
    match is_balanced(&c4.all_positive()) {
        Some(x) => println!("C+4 balanced, switch at {:?} to make it all positive", x.members()),
        None => println!("C+4 unbalanced"),
    }
    Ok(())
}
