//! The Petersen graph: second eigenvalue, Cheeger constant and λ₂.
//!
//!     cargo run --release --example petersen

use onelap::cheeger::cheeger_exact;
use onelap::graph::petersen_graph;
use onelap::linear::linear_spectrum;
use onelap::rational::Rat;
use onelap::spectrum::{enumerate_spectrum, second_eigenvalue, EnumConfig};
use onelap::tv::VertexFunction;
use onelap::verify::is_eigenvector;

fn main() -> Result<(), onelap::error::Error> {
    let g = petersen_graph();
    let report = enumerate_spectrum(&g, &EnumConfig::default())?;
    println!("spectrum: {:?}", report.values());
    println!("normal eigenvectors: {}", report.total_patterns());
    println!("mu2 = {}", second_eigenvalue(&report)?);

    let (h, cut) = cheeger_exact(&g)?;
    println!(
        "h = {h} via S = {:?} (boundary {}, volumes {}/{})",
        cut.subset, cut.boundary_size, cut.vol_s, cut.vol_sbar
    );
    println!("lambda2 = {:.6}", linear_spectrum(&g)?.lambda2());

    let outer_vs_inner =
        VertexFunction::scaled(Rat::frac(1, 30), &[1, 1, 1, 1, 1, -1, -1, -1, -1, -1]);
    if let Some(cert) = is_eigenvector(&g, &outer_vs_inner)? {
        let spokes: Vec<_> = g
            .edges()
            .iter()
            .zip(&cert.z)
            .filter(|(_, z)| !z.is_zero())
            .map(|(e, z)| format!("{e:?}={z}"))
            .collect();
        println!(
            "outer/inner split is an eigenvector at {}: {}",
            cert.mu,
            spokes.join(" ")
        );
    }
    Ok(())
}
