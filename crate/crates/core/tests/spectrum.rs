mod common;

use onelap::error::Error;
use onelap::graph::{complete_graph, cycle_graph, path_graph, petersen_graph, star_graph};
use onelap::rational::Rat;
use onelap::spectrum::{
    complete_spectrum_oracle, cycle_spectrum_oracle, enumerate_spectrum, path_spectrum_oracle,
    second_eigenvalue, star_spectrum_oracle, zero_eigenvalue_patterns, EnumConfig,
};
use onelap::tv::pattern_to_function;
use onelap::verify::{check_certificate, verify_eigenpair};

fn q(n: i64, d: i64) -> Rat {
    Rat::frac(n, d)
}

#[test]
fn small_closed_forms() {
    let cfg = EnumConfig::default();
    assert_eq!(
        enumerate_spectrum(&complete_graph(4).unwrap(), &cfg)
            .unwrap()
            .values(),
        vec![Rat::ZERO, q(2, 3), Rat::ONE]
    );
    assert_eq!(
        path_spectrum_oracle(4).unwrap(),
        vec![Rat::ZERO, q(1, 3), Rat::ONE]
    );
    assert_eq!(
        cycle_spectrum_oracle(6).unwrap(),
        vec![Rat::ZERO, q(1, 3), q(1, 2), Rat::ONE]
    );
    assert_eq!(
        complete_spectrum_oracle(5).unwrap(),
        vec![Rat::ZERO, q(3, 4), Rat::ONE]
    );
    assert_eq!(star_spectrum_oracle(7).unwrap(), vec![Rat::ZERO, Rat::ONE]);
    assert!(matches!(
        path_spectrum_oracle(1),
        Err(Error::TooSmall { .. })
    ));
}

#[test]
fn families_other_than_paths_match_their_formulas() {
    let cfg = EnumConfig::default();
    for n in 3..=7 {
        let c = enumerate_spectrum(&cycle_graph(n).unwrap(), &cfg).unwrap();
        assert_eq!(c.values(), cycle_spectrum_oracle(n).unwrap(), "C{n}");
        let k = enumerate_spectrum(&complete_graph(n).unwrap(), &cfg).unwrap();
        assert_eq!(k.values(), complete_spectrum_oracle(n).unwrap(), "K{n}");
        let s = enumerate_spectrum(&star_graph(n).unwrap(), &cfg).unwrap();
        assert_eq!(s.values(), star_spectrum_oracle(n).unwrap(), "star{n}");
    }
    for n in 3..=5 {
        let p = enumerate_spectrum(&path_graph(n).unwrap(), &cfg).unwrap();
        assert_eq!(p.values(), path_spectrum_oracle(n).unwrap(), "P{n}");
    }
}

#[test]
fn longer_paths_carry_an_extra_half() {
    let cfg = EnumConfig::default();
    let p6 = path_graph(6).unwrap();
    let report = enumerate_spectrum(&p6, &cfg).unwrap();
    assert_eq!(
        report.values(),
        vec![Rat::ZERO, q(1, 5), q(1, 3), q(1, 2), Rat::ONE]
    );
    let x = onelap::tv::VertexFunction::scaled(q(1, 4), &[0, 0, 1, 1, 0, 0]);
    assert!(verify_eigenpair(&p6, q(1, 2), &x).unwrap().is_some());
    assert!(!path_spectrum_oracle(6).unwrap().contains(&q(1, 2)));
}

#[test]
fn every_reported_pattern_is_certified() {
    let g = petersen_graph();
    let report = enumerate_spectrum(&g, &EnumConfig::default()).unwrap();
    assert_eq!(second_eigenvalue(&report).unwrap(), q(1, 3));
    for e in &report.eigenvalues {
        let first = pattern_to_function(&g, &e.patterns[0]).unwrap();
        assert!(check_certificate(&g, &first, &e.certificate).unwrap());
        for p in &e.patterns {
            let x = pattern_to_function(&g, p).unwrap();
            assert!(verify_eigenpair(&g, e.mu, &x).unwrap().is_some());
        }
    }
    assert!(report.eigenvalues.windows(2).all(|w| w[0].mu < w[1].mu));
}

#[test]
fn zero_eigenvalue_counts_for_unions() {
    let a = path_graph(2).unwrap();
    let b = cycle_graph(3).unwrap();
    assert_eq!(zero_eigenvalue_patterns(&petersen_graph()).unwrap(), 1);
    assert_eq!(zero_eigenvalue_patterns(&a.disjoint_union(&b)).unwrap(), 4);
    let three = a.disjoint_union(&b).disjoint_union(&a);
    assert_eq!(zero_eigenvalue_patterns(&three).unwrap(), 13);
    let report = enumerate_spectrum(&three, &EnumConfig::default()).unwrap();
    assert_eq!(report.components, 3);
    assert_eq!(report.get(Rat::ZERO).unwrap().pattern_count(), 13);
    assert_eq!(second_eigenvalue(&report), Err(Error::Disconnected));
}

#[test]
fn guard_and_config_errors() {
    let g = path_graph(6).unwrap();
    let cfg = EnumConfig {
        max_n: 5,
        ..EnumConfig::default()
    };
    assert_eq!(
        enumerate_spectrum(&g, &cfg),
        Err(Error::TooLarge { n: 6, max_n: 5 })
    );
    let bad = EnumConfig {
        chunk_size: 0,
        ..EnumConfig::default()
    };
    assert!(matches!(
        enumerate_spectrum(&g, &bad),
        Err(Error::InvalidConfig(_))
    ));
}

#[test]
fn chunking_and_threads_do_not_change_reports() {
    let g = cycle_graph(7).unwrap();
    let base = enumerate_spectrum(&g, &EnumConfig::with_threads(1)).unwrap();
    for (threads, chunk_size) in [(2, 1), (3, 17), (8, 4096)] {
        let cfg = EnumConfig {
            threads,
            chunk_size,
            ..EnumConfig::default()
        };
        assert_eq!(enumerate_spectrum(&g, &cfg).unwrap(), base);
    }
}
