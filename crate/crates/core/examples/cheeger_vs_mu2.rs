//! The second eigenvalue equals the Cheeger constant: compared on random
//! connected graphs through three independent routes.
//!
//!     cargo run --release --example cheeger_vs_mu2 -- [count] [seed]

use onelap::cheeger::{cheeger_exact, mu2_via_pi_min};
use onelap::graph::Graph;
use onelap::spectrum::{enumerate_spectrum, second_eigenvalue, EnumConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.25) && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("tree plus extra edges")
}

fn main() -> Result<(), onelap::error::Error> {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(20);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = EnumConfig::default();
    let mut agree = 0;
    for _ in 0..count {
        let n = rng.gen_range(4..=7);
        let g = random_connected(&mut rng, n);
        let mu2 = second_eigenvalue(&enumerate_spectrum(&g, &cfg)?)?;
        let (pi_min, pattern) = mu2_via_pi_min(&g, &cfg)?;
        let (h, cut) = cheeger_exact(&g)?;
        println!(
            "n={n} m={:<2} mu2={mu2:<5} pi-min={pi_min:<5} ({pattern}) h={h:<5} S={:?}",
            g.m(),
            cut.subset
        );
        agree += usize::from(mu2 == h && h == pi_min);
    }
    println!("{agree}/{count} graphs agree");
    Ok(())
}
