//! Exhaustive search for critical classes of a given order.

use sigcrit::census::{run_census, CensusOptions};

fn main() -> sigcrit::Result<()> {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for n in 4..=top {
        let report = run_census(&CensusOptions::new(n))?;
        println!(
            "n={n}: {} underlying graphs, {} classes examined, {} critical",
            report.underlying_graphs,
            report.classes_examined,
            report.critical_found.len()
        );
        for c in &report.critical_found {
            println!("  {} edges, potential {}, W-hat {}", c.edges, c.potential, c.is_w_hat);
        }
    }
    Ok(())
}
