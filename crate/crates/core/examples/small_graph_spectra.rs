//! Full spectra of a few small graphs, with one normal eigenvector each.
//!
//!     cargo run --example small_graph_spectra

use onelap::graph::{cycle_graph, path_graph, Graph};
use onelap::spectrum::{enumerate_spectrum, EnumConfig};

fn main() -> Result<(), onelap::error::Error> {
    let graphs = [
        ("K2", path_graph(2)?),
        ("C3", cycle_graph(3)?),
        ("P4", path_graph(4)?),
        ("C4", cycle_graph(4)?),
        (
            "fan",
            Graph::new(5, &[(0, 3), (0, 4), (3, 4), (1, 4), (2, 4)])?,
        ),
    ];
    let cfg = EnumConfig::default();
    for (name, g) in &graphs {
        let report = enumerate_spectrum(g, &cfg)?;
        println!("{name}: n = {}, m = {}", g.n(), g.m());
        for e in &report.eigenvalues {
            println!(
                "  mu = {:<5} {:>3} normal eigenvectors, e.g. {}",
                e.mu.to_string(),
                e.pattern_count(),
                e.patterns[0]
            );
        }
    }
    Ok(())
}
