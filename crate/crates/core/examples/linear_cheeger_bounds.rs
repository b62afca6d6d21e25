//! The normalized Laplacian next to the 1-Laplacian: λ₂/2 ≤ h ≤ √(2λ₂),
//! and the sweep cut of the Fiedler vector as an upper bound on h.
//!
//!     cargo run --example linear_cheeger_bounds

use onelap::cheeger::{cheeger_inequality_check, sweep_cut_f64};
use onelap::graph::{complete_graph, cycle_graph, path_graph, petersen_graph, star_graph};
use onelap::linear::linear_spectrum;

fn main() -> Result<(), onelap::error::Error> {
    let graphs = [
        ("P8", path_graph(8)?),
        ("C8", cycle_graph(8)?),
        ("K6", complete_graph(6)?),
        ("star7", star_graph(7)?),
        ("petersen", petersen_graph()),
    ];
    println!(
        "{:>9} {:>8} {:>8} {:>6} {:>8} {:>6}",
        "graph", "λ₂/2", "√(2λ₂)", "h", "sweep", "ok"
    );
    for (name, g) in &graphs {
        let (lambda2, h, ok) = cheeger_inequality_check(g)?;
        let spectrum = linear_spectrum(g)?;
        let (sweep, _) = sweep_cut_f64(g, spectrum.fiedler_vector())?;
        println!(
            "{name:>9} {:>8.4} {:>8.4} {:>6} {:>8} {ok:>6}",
            lambda2 / 2.0,
            (2.0 * lambda2).sqrt(),
            h.to_string(),
            sweep.to_string()
        );
    }
    Ok(())
}
