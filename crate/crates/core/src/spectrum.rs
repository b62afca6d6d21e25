//! Full 1-Laplacian spectrum by exhaustive ternary-pattern search.
//!
//! Every eigenvector is equivalent to a normal one, `δ⁻¹ · p` for a sign
//! pattern `p ∈ {+, −, 0}ⁿ`, and the eigenvalue of an eigenvector is its
//! energy on the constraint sphere. Scanning the `(3ⁿ − 1)/2` canonical
//! patterns and certifying each candidate therefore finds every eigenvalue
//! and every normal eigenvector (not the full eigen-cells).
//!
//! `pattern_count` is the number of certified canonical patterns for an
//! eigenvalue. It is not a topological multiplicity.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rat;
use crate::tv::{signs_to_function, tv_energy, TernaryPattern, VertexFunction};
use crate::verify::{verify_eigenpair, Certificate};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumConfig {
    /// Largest vertex count accepted for enumeration.
    pub max_n: usize,
    /// Base-3 indices scanned per work unit.
    pub chunk_size: usize,
    pub threads: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_n: 16,
            chunk_size: 4096,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl EnumConfig {
    pub fn with_threads(threads: usize) -> Self {
        EnumConfig {
            threads,
            ..EnumConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n < 2 {
            return Err(Error::InvalidConfig("max_n must be at least 2".into()));
        }
        if self.chunk_size == 0 {
            return Err(Error::InvalidConfig("chunk_size must be at least 1".into()));
        }
        if self.threads == 0 {
            return Err(Error::InvalidConfig("threads must be at least 1".into()));
        }
        Ok(())
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        self.validate()?;
        // 3^n must fit in u64 as well
        let max_n = self.max_n.min(40);
        if g.n() > max_n {
            return Err(Error::TooLarge { n: g.n(), max_n });
        }
        Ok(())
    }

    /// Runs `f` on a dedicated pool with `threads` workers.
    pub(crate) fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        Ok(pool.install(f))
    }
}

/// All certified normal eigenvectors sharing one eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenvalue {
    pub mu: Rat,
    /// Canonical patterns in base-3 index order.
    pub patterns: Vec<TernaryPattern>,
    /// Certificate for the first pattern.
    pub certificate: Certificate,
}

impl Eigenvalue {
    pub fn pattern_count(&self) -> usize {
        self.patterns.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub edges: Vec<(usize, usize)>,
    /// Strictly increasing in `mu`.
    pub eigenvalues: Vec<Eigenvalue>,
}

impl SpectrumReport {
    pub fn values(&self) -> Vec<Rat> {
        self.eigenvalues.iter().map(|e| e.mu).collect()
    }

    pub fn get(&self, mu: Rat) -> Option<&Eigenvalue> {
        self.eigenvalues.iter().find(|e| e.mu == mu)
    }

    /// Number of certified canonical patterns over all eigenvalues.
    pub fn total_patterns(&self) -> usize {
        self.eigenvalues.iter().map(Eigenvalue::pattern_count).sum()
    }
}

/// Candidate eigenvalue of a sign pattern and its certificate, if any.
pub fn certify_pattern(
    g: &Graph,
    signs: &[i8],
) -> Result<Option<(Rat, VertexFunction, Certificate)>> {
    let x = signs_to_function(g, signs)?;
    let mu = tv_energy(g, &x)?;
    Ok(verify_eigenpair(g, mu, &x)?.map(|c| (mu, x, c)))
}

type ChunkResult = BTreeMap<Rat, (Vec<TernaryPattern>, Certificate)>;

fn scan_range(g: &Graph, start: u64, end: u64) -> Result<ChunkResult> {
    let mut found = ChunkResult::new();
    for index in start..end {
        let Some(p) = TernaryPattern::from_index(index, g.n()) else {
            continue;
        };
        if let Some((mu, _, cert)) = certify_pattern(g, p.signs())? {
            found
                .entry(mu)
                .or_insert_with(|| (Vec::new(), cert))
                .0
                .push(p);
        }
    }
    Ok(found)
}

pub(crate) fn index_chunks(total: u64, chunk_size: usize) -> Vec<(u64, u64)> {
    let step = chunk_size as u64;
    (0..total.div_ceil(step))
        .map(|k| (k * step, ((k + 1) * step).min(total)))
        .collect()
}

/// Scans every canonical pattern and groups certified ones by eigenvalue.
/// The result does not depend on `cfg.threads` or `cfg.chunk_size`.
pub fn enumerate_spectrum(g: &Graph, cfg: &EnumConfig) -> Result<SpectrumReport> {
    cfg.check_size(g)?;
    let total = 3u64.pow(g.n() as u32);
    let chunks = index_chunks(total, cfg.chunk_size);
    let partials: Vec<Result<ChunkResult>> = cfg.install(|| {
        chunks
            .par_iter()
            .map(|&(a, b)| scan_range(g, a, b))
            .collect()
    })?;

    let mut merged: BTreeMap<Rat, (Vec<TernaryPattern>, Certificate)> = BTreeMap::new();
    for part in partials {
        for (mu, (patterns, cert)) in part? {
            merged
                .entry(mu)
                .or_insert_with(|| (Vec::new(), cert))
                .0
                .extend(patterns);
        }
    }
    Ok(SpectrumReport {
        n: g.n(),
        m: g.m(),
        components: g.connected_components().count,
        edges: g.edges().to_vec(),
        eigenvalues: merged
            .into_iter()
            .map(|(mu, (patterns, certificate))| Eigenvalue {
                mu,
                patterns,
                certificate,
            })
            .collect(),
    })
}

/// Smallest nonzero eigenvalue of a connected graph.
pub fn second_eigenvalue(report: &SpectrumReport) -> Result<Rat> {
    if report.components != 1 {
        return Err(Error::Disconnected);
    }
    report
        .eigenvalues
        .iter()
        .map(|e| e.mu)
        .find(|mu| !mu.is_zero())
        .ok_or_else(|| Error::InvalidConfig("spectrum has no nonzero eigenvalue".into()))
}

fn sorted(mut v: Vec<Rat>) -> Vec<Rat> {
    v.sort();
    v.dedup();
    v
}

fn check_min(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooSmall { what, n, min });
    }
    Ok(())
}

/// Closed-form path spectrum: `1/(n − 2k + 1)` for even `n = 2r`,
/// `1/(n − 2k)` for odd `n = 2r + 1`, `k = 1..r−1`, plus 0 and 1.
///
/// This is the published formula. It omits some eigenvalues for n ≥ 6
/// (e.g. 1/2 on P₆, carried by `(0, 0, +, +, 0, 0)`).
pub fn path_spectrum_oracle(n: usize) -> Result<Vec<Rat>> {
    check_min("path", n, 2)?;
    let r = n / 2;
    let mut v = vec![Rat::ZERO, Rat::ONE];
    for k in 1..r {
        let den = if n.is_multiple_of(2) {
            n - 2 * k + 1
        } else {
            n - 2 * k
        };
        v.push(Rat::from(den).recip()?);
    }
    Ok(sorted(v))
}

/// `{0, 1/r, …, 1/2, 1}` with `r = ⌊n/2⌋`.
pub fn cycle_spectrum_oracle(n: usize) -> Result<Vec<Rat>> {
    check_min("cycle", n, 3)?;
    let r = n / 2;
    let mut v = vec![Rat::ZERO];
    for j in 1..=r {
        v.push(Rat::from(j).recip()?);
    }
    Ok(sorted(v))
}

/// `{0, n/(2(n−1)), …, (n−2)/(n−1), 1}` for even n and
/// `{0, (n+1)/(2(n−1)), …, (n−2)/(n−1), 1}` for odd n.
pub fn complete_spectrum_oracle(n: usize) -> Result<Vec<Rat>> {
    check_min("complete graph", n, 3)?;
    let r = n / 2;
    let mut v = vec![Rat::ZERO, Rat::ONE];
    for k in 0..r.saturating_sub(1) {
        let num = if n.is_multiple_of(2) {
            r + k
        } else {
            r + k + 1
        };
        v.push(Rat::new(num as i128, (n - 1) as i128)?);
    }
    Ok(sorted(v))
}

/// A star has only the eigenvalues 0 and 1.
pub fn star_spectrum_oracle(n: usize) -> Result<Vec<Rat>> {
    check_min("star", n, 2)?;
    Ok(vec![Rat::ZERO, Rat::ONE])
}

/// Number of certified canonical patterns with eigenvalue 0.
///
/// A zero-energy pattern is constant on each component, so only the `3^r`
/// per-component sign assignments need checking.
pub fn zero_eigenvalue_patterns(g: &Graph) -> Result<u64> {
    let labels = g.connected_components();
    let r = labels.count;
    if r > 40 {
        return Err(Error::TooLarge { n: r, max_n: 40 });
    }
    let mut count = 0;
    for index in 0..3u64.pow(r as u32) {
        let Some(p) = TernaryPattern::from_index(index, r) else {
            continue;
        };
        let signs: Vec<i8> = labels.component_id.iter().map(|&c| p.signs()[c]).collect();
        let x = signs_to_function(g, &signs)?;
        debug_assert!(tv_energy(g, &x)?.is_zero());
        if verify_eigenpair(g, Rat::ZERO, &x)?.is_some() {
            count += 1;
        }
    }
    Ok(count)
}
