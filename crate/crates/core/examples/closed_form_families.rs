//! Enumerated spectra of paths, cycles, complete graphs and stars next to
//! their closed forms. Paths from six vertices on pick up an eigenvalue 1/2
//! that the closed form does not list.
//!
//!     cargo run --release --example closed_form_families

use onelap::error::Result;
use onelap::graph::{complete_graph, cycle_graph, path_graph, star_graph, Graph};
use onelap::rational::Rat;
use onelap::spectrum::{
    complete_spectrum_oracle, cycle_spectrum_oracle, enumerate_spectrum, path_spectrum_oracle,
    star_spectrum_oracle, EnumConfig,
};

type Builder = fn(usize) -> Result<Graph>;
type Oracle = fn(usize) -> Result<Vec<Rat>>;

fn show(values: &[Rat]) -> String {
    values
        .iter()
        .map(Rat::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() -> Result<()> {
    let families: [(&str, Builder, Oracle); 4] = [
        ("path", path_graph, path_spectrum_oracle),
        ("cycle", cycle_graph, cycle_spectrum_oracle),
        ("complete", complete_graph, complete_spectrum_oracle),
        ("star", star_graph, star_spectrum_oracle),
    ];
    let cfg = EnumConfig::default();
    for (name, build, oracle) in families {
        for n in 3..=8 {
            let found = enumerate_spectrum(&build(n)?, &cfg)?.values();
            let formula = oracle(n)?;
            let mark = if found == formula { "=" } else { "≠" };
            println!(
                "{name:>8} {n}: {{{}}} {mark} {{{}}}",
                show(&found),
                show(&formula)
            );
        }
    }
    Ok(())
}
