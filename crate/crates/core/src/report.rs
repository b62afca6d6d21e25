//! Machine-readable views of results: JSON records and CSV rows.
//!
//! Rationals are always rendered as `"p/q"` (or `"p"`), floats rounded to
//! 12 significant digits.

use std::fmt::Write as _;

use serde::Serialize;

use crate::cheeger::Cut;
use crate::rational::Rat;
use crate::spectrum::SpectrumReport;
use crate::tv::TernaryPattern;
use crate::verify::Certificate;

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn fmt_float(x: f64) -> String {
    let r = round12(x);
    if r == 0.0 {
        "0".to_string()
    } else {
        r.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeValue {
    pub edge: [usize; 2],
    pub value: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub mu: Rat,
    pub z: Vec<EdgeValue>,
}

impl CertificateRecord {
    pub fn new(cert: &Certificate, edges: &[(usize, usize)]) -> Self {
        CertificateRecord {
            mu: cert.mu,
            z: edges
                .iter()
                .zip(&cert.z)
                .map(|(&(u, v), &value)| EdgeValue {
                    edge: [u, v],
                    value,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueRecord<'a> {
    pub mu: Rat,
    pub mu_float: f64,
    pub pattern_count: usize,
    pub patterns: &'a [TernaryPattern],
    pub certificate: CertificateRecord,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRecord<'a> {
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub eigenvalues: Vec<EigenvalueRecord<'a>>,
}

impl<'a> SpectrumRecord<'a> {
    pub fn new(report: &'a SpectrumReport) -> Self {
        SpectrumRecord {
            n: report.n,
            m: report.m,
            components: report.components,
            eigenvalues: report
                .eigenvalues
                .iter()
                .map(|e| EigenvalueRecord {
                    mu: e.mu,
                    mu_float: round12(e.mu.to_f64()),
                    pattern_count: e.pattern_count(),
                    patterns: &e.patterns,
                    certificate: CertificateRecord::new(&e.certificate, &report.edges),
                })
                .collect(),
        }
    }
}

pub fn spectrum_json(report: &SpectrumReport) -> String {
    serde_json::to_string_pretty(&SpectrumRecord::new(report)).expect("serializable") + "\n"
}

/// One row per (eigenvalue, pattern); patterns written as `+`/`-`/`0` strings.
pub fn spectrum_csv(report: &SpectrumReport) -> String {
    let mut out = String::from("mu,mu_float,pattern\n");
    for e in &report.eigenvalues {
        for p in &e.patterns {
            let _ = writeln!(out, "{},{},{}", e.mu, fmt_float(e.mu.to_f64()), p);
        }
    }
    out
}

pub fn spectrum_text(report: &SpectrumReport) -> String {
    let mut out = format!(
        "n = {}, m = {}, components = {}\n",
        report.n, report.m, report.components
    );
    for e in &report.eigenvalues {
        let _ = writeln!(
            out,
            "mu = {} ({})  patterns: {}",
            e.mu,
            fmt_float(e.mu.to_f64()),
            e.pattern_count()
        );
        for p in &e.patterns {
            let _ = writeln!(out, "    {p}");
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutRecord {
    pub h: Rat,
    pub subset: Vec<usize>,
    pub boundary: usize,
    pub vol: [usize; 2],
}

impl From<&Cut> for CutRecord {
    fn from(c: &Cut) -> Self {
        CutRecord {
            h: c.ratio,
            subset: c.subset.clone(),
            boundary: c.boundary_size,
            vol: [c.vol_s, c.vol_sbar],
        }
    }
}

/// Output of the comparison between μ₂, h and λ₂.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareRow {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub mu2: Rat,
    pub h: Rat,
    pub lambda2: f64,
    pub cheeger_ineq_ok: bool,
}

impl CompareRow {
    pub const CSV_HEADER: &'static str = "graph,n,m,mu2,h,lambda2,cheeger_ineq_ok";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.graph,
            self.n,
            self.m,
            self.mu2,
            self.h,
            fmt_float(self.lambda2),
            self.cheeger_ineq_ok
        )
    }
}
