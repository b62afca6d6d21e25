//! Nodal domains of certified eigenvectors: singletons exactly at μ = 1,
//! domains with an adjacent pair below 1.
//!
//!     cargo run --example nodal_domains

use onelap::graph::cycle_graph;
use onelap::spectrum::{enumerate_spectrum, EnumConfig};
use onelap::tv::{in_pi, nodal_decomposition, pattern_to_function};

fn main() -> Result<(), onelap::error::Error> {
    let g = cycle_graph(6)?;
    let report = enumerate_spectrum(&g, &EnumConfig::default())?;
    for e in &report.eigenvalues {
        println!("mu = {}", e.mu);
        for p in e.patterns.iter().take(4) {
            let x = pattern_to_function(&g, p)?;
            let dec = nodal_decomposition(&g, &x)?;
            println!(
                "  {p}  +domains {:?}  -domains {:?}  null {:?}  in π: {}",
                dec.pos_domains,
                dec.neg_domains,
                dec.null_set,
                in_pi(&g, &x)?
            );
        }
        if e.pattern_count() > 4 {
            println!("  … {} more", e.pattern_count() - 4);
        }
    }
    Ok(())
}
