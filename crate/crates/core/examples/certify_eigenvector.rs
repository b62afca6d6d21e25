//! Certifying candidate eigenvectors and reading back the edge values.
//!
//!     cargo run --example certify_eigenvector

use onelap::graph::path_graph;
use onelap::rational::Rat;
use onelap::tv::VertexFunction;
use onelap::verify::{check_certificate, is_eigenvector, verify_eigenpair};

fn main() -> Result<(), onelap::error::Error> {
    let g = path_graph(4)?;
    let candidates = [
        VertexFunction::scaled(Rat::frac(1, 6), &[1, 1, -1, -1]),
        VertexFunction::new(vec![
            Rat::frac(1, 12),
            Rat::frac(1, 12),
            Rat::frac(-1, 4),
            Rat::frac(-1, 4),
        ]),
        VertexFunction::new(vec![
            Rat::frac(3, 8),
            Rat::frac(1, 8),
            Rat::frac(-1, 8),
            Rat::frac(-1, 8),
        ]),
    ];
    for x in &candidates {
        match is_eigenvector(&g, x)? {
            Some(cert) => {
                assert!(check_certificate(&g, x, &cert)?);
                println!(
                    "{:?}: eigenvector, mu = {}, z = {:?}",
                    x.values(),
                    cert.mu,
                    cert.z
                );
            }
            None => println!("{:?}: not an eigenvector", x.values()),
        }
    }

    // Only the energy of the normalized vector certifies.
    let x = &candidates[0];
    for mu in [Rat::frac(1, 3), Rat::frac(1, 2), Rat::frac(4, 3)] {
        let verdict = verify_eigenpair(&g, mu, x)?.is_some();
        println!(
            "mu = {mu}: {}",
            if verdict { "certified" } else { "infeasible" }
        );
    }
    Ok(())
}
