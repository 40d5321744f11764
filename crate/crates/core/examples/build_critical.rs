//! Sparse critical graphs of every order from 9 up.

use sigcrit::constructions::build_critical;

fn main() -> sigcrit::Result<()> {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);
    for n in 9..=top {
        let g = build_critical(n)?;
        let low = (4 * n).div_ceil(3);
        println!("n={n:<3} edges={:<3} ceil(4n/3)={low:<3} potential={}", g.edge_count(), g.potential());
    }
    Ok(())
}
