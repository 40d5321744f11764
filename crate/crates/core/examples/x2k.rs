//! X_2k colourings of signed multigraphs.

use sigcrit::coloring::x2k_coloring;
use sigcrit::constructions::{complete, tilde};
use sigcrit::sgraph::SignedMultiGraph;

fn main() {
    let k4 = SignedMultiGraph::from(&complete(4));
    let doubled = tilde(&complete(3));
    for (name, g) in [("K4", &k4), ("doubled K3", &doubled)] {
        for k in 1..=3 {
            match x2k_coloring(g, k) {
                Some(c) => println!("{name:>10} X{}: {:?}", 2 * k, c.colors),
                None => println!("{name:>10} X{}: none", 2 * k),
            }
        }
    }
}
