//! Four-colouring through homomorphisms of T2(G,+) to the negative four-cycle.

use sigcrit::coloring::{four_color_via_c4, is_proper_coloring};
use sigcrit::constructions::{complete, petersen, wheel};

fn main() -> sigcrit::Result<()> {
    for (name, g) in [("W5", wheel(5)?), ("Petersen", petersen()), ("K4", complete(4)), ("K5", complete(5))] {
        match four_color_via_c4(&g) {
            Some(c) => {
                assert!(is_proper_coloring(&g, &c));
                println!("{name:>8}: {c:?}");
            }
            None => println!("{name:>8}: not 4-colourable"),
        }
    }
    Ok(())
}
