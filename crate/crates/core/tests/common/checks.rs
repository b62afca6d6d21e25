//! Randomised property checks shared by the property tests and the
//! acceptance runner. Each returns the number of cases checked, or a
//! description of the first counterexample.

use onelap::cheeger::eigenvalue_range_bound;
use onelap::graph::Graph;
use onelap::rational::Rat;
use onelap::spectrum::{enumerate_spectrum, zero_eigenvalue_patterns, EnumConfig, SpectrumReport};
use onelap::tv::{
    in_pi, nodal_decomposition, normalize_eigenvector, pattern_to_function, tv_energy,
    weighted_norm, VertexFunction,
};
use onelap::verify::{
    check_certificate, is_eigenvector, verify_eigenpair, verify_eigenpair_oriented,
};
use rand::Rng;

use super::{
    cut_condition_oracle, random_connected_graph, random_forest_of_components, random_signs,
    random_vector, rng,
};

pub const PROPERTY_CASES: usize = 1000;
pub const ORACLE_CASES: usize = 600;

pub type Check = Result<usize, String>;

pub struct Corpus {
    pub entries: Vec<(Graph, SpectrumReport)>,
}

/// `PROPERTY_CASES` random connected graphs on 3 to 6 vertices with their
/// enumerated spectra.
pub fn corpus() -> &'static Corpus {
    static CORPUS: std::sync::OnceLock<Corpus> = std::sync::OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut r = rng(0x5eed_0001);
        let cfg = EnumConfig::default();
        let entries = (0..PROPERTY_CASES)
            .map(|_| {
                let n = r.gen_range(3..=6);
                let p = r.gen_range(0.0..0.7);
                let g = random_connected_graph(&mut r, n, p);
                let report = enumerate_spectrum(&g, &cfg).unwrap();
                (g, report)
            })
            .collect();
        Corpus { entries }
    })
}

fn each_pattern(mut f: impl FnMut(&Graph, Rat, &VertexFunction) -> Result<(), String>) -> Check {
    let corpus = corpus();
    for (g, report) in &corpus.entries {
        for e in &report.eigenvalues {
            for p in &e.patterns {
                let x = pattern_to_function(g, p).map_err(|err| err.to_string())?;
                f(g, e.mu, &x)
                    .map_err(|msg| format!("{msg} on {:?} with pattern {p}", g.edges()))?;
            }
        }
    }
    Ok(corpus.entries.len())
}

pub fn spectrum_in_unit_interval() -> Check {
    each_pattern(|_, mu, _| {
        if mu.is_negative() || mu > Rat::ONE {
            return Err(format!("eigenvalue {mu} outside [0, 1]"));
        }
        Ok(())
    })
}

pub fn nonzero_eigenvectors_in_pi() -> Check {
    each_pattern(|g, mu, x| {
        if !mu.is_zero() && !in_pi(g, x).map_err(|e| e.to_string())? {
            return Err(format!("eigenvector at {mu} not in π"));
        }
        Ok(())
    })
}

pub fn eigenvalue_range() -> Check {
    let corpus = corpus();
    for (g, report) in &corpus.entries {
        let (lo, hi) = eigenvalue_range_bound(g).map_err(|e| e.to_string())?;
        for mu in report.values() {
            if mu.is_positive() && mu < Rat::ONE && (mu < lo || mu > hi) {
                return Err(format!("{mu} outside [{lo}, {hi}] on {:?}", g.edges()));
            }
        }
    }
    Ok(corpus.entries.len())
}

pub fn nodal_domain_shapes() -> Check {
    each_pattern(|g, mu, x| {
        let dec = nodal_decomposition(g, x).map_err(|e| e.to_string())?;
        let all_singletons = dec.domains().all(|d| d.len() == 1);
        let all_have_pair = dec.domains().all(|d| {
            d.iter()
                .any(|&u| d.iter().any(|&v| u < v && g.has_edge(u, v)))
        });
        if (mu == Rat::ONE) != all_singletons {
            return Err(format!(
                "μ = {mu} but all-singleton domains is {all_singletons}"
            ));
        }
        if (mu < Rat::ONE) != all_have_pair {
            return Err(format!(
                "μ = {mu} but adjacent-pair domains is {all_have_pair}"
            ));
        }
        Ok(())
    })
}

pub fn pattern_count_at_least_n() -> Check {
    let corpus = corpus();
    for (g, report) in &corpus.entries {
        if report.total_patterns() < g.n() {
            return Err(format!(
                "{} certified patterns on {} vertices",
                report.total_patterns(),
                g.n()
            ));
        }
    }
    Ok(corpus.entries.len())
}

pub fn zero_pattern_count() -> Check {
    let mut r = rng(0x5eed_0002);
    let cfg = EnumConfig::default();
    for _ in 0..PROPERTY_CASES {
        let parts = r.gen_range(1..=3);
        let g = random_forest_of_components(&mut r, parts, 6);
        let k = g.connected_components().count as u32;
        let expected = (3u64.pow(k) - 1) / 2;
        let counted = zero_eigenvalue_patterns(&g).map_err(|e| e.to_string())?;
        let enumerated = enumerate_spectrum(&g, &cfg)
            .map_err(|e| e.to_string())?
            .get(Rat::ZERO)
            .map_or(0, |e| e.pattern_count() as u64);
        if counted != expected || enumerated != expected {
            return Err(format!(
                "{k} components: expected {expected}, counted {counted}, enumerated {enumerated}"
            ));
        }
    }
    Ok(PROPERTY_CASES)
}

/// Reassigns random positive levels to every nodal domain of a certified
/// normal eigenvector and checks the result is still an eigenvector with the
/// same eigenvalue.
pub fn cell_invariance() -> Check {
    let corpus = corpus();
    let mut r = rng(0x5eed_0003);
    let mut cases = 0;
    for (g, report) in &corpus.entries {
        let nonzero: Vec<_> = report
            .eigenvalues
            .iter()
            .filter(|e| !e.mu.is_zero())
            .collect();
        let e = nonzero[r.gen_range(0..nonzero.len())];
        let p = &e.patterns[r.gen_range(0..e.patterns.len())];
        let x = pattern_to_function(g, p).map_err(|e| e.to_string())?;
        let dec = nodal_decomposition(g, &x).map_err(|e| e.to_string())?;
        let mut values = vec![Rat::ZERO; g.n()];
        for d in &dec.pos_domains {
            let level = Rat::frac(r.gen_range(1..=9), r.gen_range(1..=4));
            d.iter().for_each(|&v| values[v] = level);
        }
        for d in &dec.neg_domains {
            let level = Rat::frac(r.gen_range(1..=9), r.gen_range(1..=4));
            d.iter().for_each(|&v| values[v] = -level);
        }
        let y =
            normalize_eigenvector(g, &VertexFunction::new(values)).map_err(|e| e.to_string())?;
        match is_eigenvector(g, &y).map_err(|e| e.to_string())? {
            Some(cert) if cert.mu == e.mu => {}
            other => {
                return Err(format!(
                    "resampled {p} at μ = {} gave {:?} on {:?}",
                    e.mu,
                    other.map(|c| c.mu),
                    g.edges()
                ))
            }
        }
        cases += 1;
    }
    Ok(cases)
}

pub fn orientation_and_scale_invariance() -> Check {
    let mut r = rng(0x5eed_0004);
    for _ in 0..PROPERTY_CASES {
        let n = r.gen_range(2..=6);
        let g = random_connected_graph(&mut r, n, 0.4);
        let signs = random_signs(&mut r, n);
        let x = VertexFunction::new(signs.iter().map(|&s| Rat::int(s as i64)).collect());
        let base = is_eigenvector(&g, &x).map_err(|e| e.to_string())?;

        let mu = tv_energy(&g, &x).unwrap() / weighted_norm(&g, &x).unwrap();
        let flipped: Vec<bool> = (0..g.m()).map(|_| r.gen_bool(0.5)).collect();
        let oriented =
            verify_eigenpair_oriented(&g, mu, &x, &flipped).map_err(|e| e.to_string())?;
        if oriented.is_some() != base.is_some() {
            return Err(format!(
                "orientation {flipped:?} changed the verdict for {signs:?}"
            ));
        }
        if let Some(cert) = &oriented {
            if !check_certificate(&g, &x, cert).unwrap() {
                return Err("oriented certificate fails the direct check".into());
            }
        }

        let mut c = Rat::ZERO;
        while c.is_zero() {
            c = super::random_rational(&mut r, 7, 5);
        }
        let scaled = is_eigenvector(&g, &x.scale(c)).map_err(|e| e.to_string())?;
        if scaled.as_ref().map(|c| c.mu) != base.as_ref().map(|c| c.mu) {
            return Err(format!("scaling {signs:?} by {c} changed the verdict"));
        }
    }
    Ok(PROPERTY_CASES)
}

pub fn energy_below_norm() -> Check {
    let mut r = rng(0x5eed_0005);
    for _ in 0..PROPERTY_CASES {
        let n = r.gen_range(2..=8);
        let g = random_connected_graph(&mut r, n, 0.3);
        let x = random_vector(&mut r, n);
        let i = tv_energy(&g, &x).unwrap();
        let norm = weighted_norm(&g, &x).unwrap();
        if i > norm {
            return Err(format!("I(x) = {i} > {norm} for {:?}", x.values()));
        }
    }
    Ok(PROPERTY_CASES)
}

/// `verify_eigenpair` against the cut-condition oracle, on graphs with at
/// most five vertices (some disconnected), ternary and general rational
/// vectors, and eigenvalue candidates both matching and not matching `I(x)`.
pub fn verifier_matches_oracle() -> Check {
    let mut r = rng(0x5eed_0006);
    let candidates = [
        Rat::ZERO,
        Rat::frac(1, 5),
        Rat::frac(1, 4),
        Rat::frac(1, 3),
        Rat::frac(1, 2),
        Rat::frac(2, 3),
        Rat::ONE,
        Rat::frac(4, 3),
    ];
    let mut feasible = 0;
    for case in 0..ORACLE_CASES {
        let g = if case % 5 == 4 {
            random_forest_of_components(&mut r, 2, 5)
        } else {
            let n = r.gen_range(2..=5);
            random_connected_graph(&mut r, n, 0.5)
        };
        let n = g.n();
        let x = if r.gen_bool(0.7) {
            VertexFunction::new(
                random_signs(&mut r, n)
                    .iter()
                    .map(|&s| Rat::int(s as i64))
                    .collect(),
            )
        } else {
            random_vector(&mut r, n)
        };
        let mu = if r.gen_bool(0.6) {
            tv_energy(&g, &x).unwrap() / weighted_norm(&g, &x).unwrap()
        } else {
            candidates[r.gen_range(0..candidates.len())]
        };
        let got = verify_eigenpair(&g, mu, &x).map_err(|e| e.to_string())?;
        let expected = cut_condition_oracle(&g, mu, &x);
        if got.is_some() != expected {
            return Err(format!(
                "μ = {mu}, x = {:?} on {:?}: verifier {}, oracle {expected}",
                x.values(),
                g.edges(),
                got.is_some()
            ));
        }
        if let Some(cert) = got {
            feasible += 1;
            if !check_certificate(&g, &x, &cert).unwrap() {
                return Err("certificate fails the direct check".into());
            }
            if !mu.is_zero() {
                let d = |s: i8| -> usize {
                    (0..n)
                        .filter(|&v| x[v].signum() == s)
                        .map(|v| g.degree(v))
                        .sum()
                };
                if d(1).abs_diff(d(-1)) > d(0) {
                    return Err(format!(
                        "certified x = {:?} violates the weighted median",
                        x.values()
                    ));
                }
            }
        }
    }
    if feasible == 0 || feasible == ORACLE_CASES {
        return Err(format!(
            "degenerate sample: {feasible} feasible of {ORACLE_CASES}"
        ));
    }
    Ok(ORACLE_CASES)
}
