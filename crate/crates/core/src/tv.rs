//! Total variation, the weighted ℓ¹ norm, and nodal-domain structure of
//! vertex functions.
//!
//! The energy is `I(x) = Σ_{e ∈ E} |x_head − x_tail|`, one term per
//! undirected edge. The constraint sphere is `Σ d_i |x_i| = 1`. Eigenvectors
//! of the 1-Laplacian are equivalent to *normal* vectors taking only the
//! values `±1/δ` and `0`, which is what [`TernaryPattern`] encodes.

use std::ops::Index;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rat;

/// A rational value per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexFunction(Vec<Rat>);

impl VertexFunction {
    pub fn new(values: Vec<Rat>) -> Self {
        VertexFunction(values)
    }

    pub fn zeros(n: usize) -> Self {
        VertexFunction(vec![Rat::ZERO; n])
    }

    /// `scale · (v_0, v_1, …)` for integer entries.
    pub fn scaled(scale: Rat, values: &[i64]) -> Self {
        VertexFunction(values.iter().map(|&v| scale * Rat::int(v)).collect())
    }

    pub fn values(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, c: Rat) -> VertexFunction {
        VertexFunction(self.0.iter().map(|&v| v * c).collect())
    }

    pub fn signs(&self) -> Vec<i8> {
        self.0.iter().map(Rat::signum).collect()
    }
}

impl Index<usize> for VertexFunction {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl From<Vec<Rat>> for VertexFunction {
    fn from(v: Vec<Rat>) -> Self {
        VertexFunction(v)
    }
}

/// Sign vector in {+1, −1, 0}ⁿ, not identically zero, first nonzero entry +1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryPattern(Vec<i8>);

impl TernaryPattern {
    /// Validates an already-canonical sign vector.
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|s| !(-1..=1).contains(s)) {
            return Err(Error::NonCanonicalPattern);
        }
        match signs.iter().find(|&&s| s != 0) {
            None => Err(Error::AllZeroPattern),
            Some(1) => Ok(TernaryPattern(signs)),
            Some(_) => Err(Error::NonCanonicalPattern),
        }
    }

    /// The canonical representative of `±signs`.
    pub fn canonical(mut signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|s| !(-1..=1).contains(s)) {
            return Err(Error::NonCanonicalPattern);
        }
        match signs.iter().find(|&&s| s != 0) {
            None => return Err(Error::AllZeroPattern),
            Some(-1) => signs.iter_mut().for_each(|s| *s = -*s),
            Some(_) => {}
        }
        Ok(TernaryPattern(signs))
    }

    /// Decodes a base-3 index (vertex 0 is the least significant digit;
    /// digit 1 is `+`, digit 2 is `−`). Returns `None` for the zero index
    /// and for non-canonical patterns.
    pub fn from_index(mut index: u64, n: usize) -> Option<Self> {
        let mut signs = vec![0i8; n];
        let mut first = 0i8;
        for s in signs.iter_mut() {
            let digit = (index % 3) as i8;
            index /= 3;
            *s = match digit {
                1 => 1,
                2 => -1,
                _ => 0,
            };
            if first == 0 {
                first = *s;
            }
        }
        (first == 1).then_some(TernaryPattern(signs))
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Serialize for TernaryPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl std::fmt::Display for TernaryPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &s in &self.0 {
            f.write_str(match s {
                1 => "+",
                -1 => "-",
                _ => "0",
            })?;
        }
        Ok(())
    }
}

/// Partition of V into ± nodal domains and the null set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodalDecomposition {
    pub pos_domains: Vec<Vec<usize>>,
    pub neg_domains: Vec<Vec<usize>>,
    pub null_set: Vec<usize>,
    pub delta_pos: usize,
    pub delta_neg: usize,
    pub delta_zero: usize,
}

impl NodalDecomposition {
    pub fn r_pos(&self) -> usize {
        self.pos_domains.len()
    }

    pub fn r_neg(&self) -> usize {
        self.neg_domains.len()
    }

    /// Positive then negative domains.
    pub fn domains(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.pos_domains.iter().chain(self.neg_domains.iter())
    }
}

fn check_len(g: &Graph, x: &VertexFunction) -> Result<()> {
    if x.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: x.len(),
        });
    }
    Ok(())
}

/// Σ d_i |x_i|.
pub fn weighted_norm(g: &Graph, x: &VertexFunction) -> Result<Rat> {
    check_len(g, x)?;
    let mut acc = Rat::ZERO;
    for (i, v) in x.values().iter().enumerate() {
        acc = acc.checked_add(&v.abs().checked_mul(&Rat::from(g.degree(i)))?)?;
    }
    Ok(acc)
}

/// Σ over edges of |x_head − x_tail|.
pub fn tv_energy(g: &Graph, x: &VertexFunction) -> Result<Rat> {
    check_len(g, x)?;
    let mut acc = Rat::ZERO;
    for &(u, v) in g.edges() {
        acc = acc.checked_add(&x[u].checked_sub(&x[v])?.abs())?;
    }
    Ok(acc)
}

pub fn nodal_decomposition(g: &Graph, x: &VertexFunction) -> Result<NodalDecomposition> {
    check_len(g, x)?;
    let signs = x.signs();
    Ok(decompose_signs(g, &signs))
}

pub(crate) fn decompose_signs(g: &Graph, signs: &[i8]) -> NodalDecomposition {
    let domains_of = |sign: i8| g.components_within(|v| signs[v] == sign).members();
    let pos_domains = domains_of(1);
    let neg_domains = domains_of(-1);
    let null_set: Vec<usize> = (0..g.n()).filter(|&v| signs[v] == 0).collect();
    let vol = |sign: i8| -> usize {
        (0..g.n())
            .filter(|&v| signs[v] == sign)
            .map(|v| g.degree(v))
            .sum()
    };
    NodalDecomposition {
        pos_domains,
        neg_domains,
        null_set,
        delta_pos: vol(1),
        delta_neg: vol(-1),
        delta_zero: vol(0),
    }
}

/// Membership in π: `|δ⁺ − δ⁻| ≤ δ⁰`, for x on the constraint sphere.
pub fn in_pi(g: &Graph, x: &VertexFunction) -> Result<bool> {
    if weighted_norm(g, x)? != Rat::ONE {
        return Err(Error::NotOnX);
    }
    Ok(signs_in_pi(g, &x.signs()))
}

pub(crate) fn signs_in_pi(g: &Graph, signs: &[i8]) -> bool {
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    for (v, &s) in signs.iter().enumerate() {
        match s {
            1 => pos += g.degree(v),
            -1 => neg += g.degree(v),
            _ => zero += g.degree(v),
        }
    }
    pos.abs_diff(neg) <= zero
}

/// Normal form `δ⁻¹ · sgn(x)` with `δ = δ⁺ + δ⁻`.
pub fn normalize_eigenvector(g: &Graph, x: &VertexFunction) -> Result<VertexFunction> {
    check_len(g, x)?;
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    signs_to_function(g, &x.signs())
}

pub fn pattern_to_function(g: &Graph, p: &TernaryPattern) -> Result<VertexFunction> {
    if p.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: p.len(),
        });
    }
    signs_to_function(g, p.signs())
}

pub(crate) fn signs_to_function(g: &Graph, signs: &[i8]) -> Result<VertexFunction> {
    let delta: usize = signs
        .iter()
        .enumerate()
        .filter(|(_, &s)| s != 0)
        .map(|(v, _)| g.degree(v))
        .sum();
    if delta == 0 {
        return Err(Error::AllZeroPattern);
    }
    let level = Rat::from(delta).recip()?;
    Ok(VertexFunction(
        signs
            .iter()
            .map(|&s| match s {
                1 => level,
                -1 => -level,
                _ => Rat::ZERO,
            })
            .collect(),
    ))
}

/// Energy of the function equal to `levels[k]` on the k-th positive domain,
/// `−levels[r⁺ + k]` on the k-th negative domain, and 0 on the null set,
/// computed from inter-domain edge counts.
pub fn tv_energy_nodal(g: &Graph, dec: &NodalDecomposition, levels: &[Rat]) -> Result<Rat> {
    let r_pos = dec.r_pos();
    let r = r_pos + dec.r_neg();
    if levels.len() != r {
        return Err(Error::LengthMismatch {
            expected: r,
            found: levels.len(),
        });
    }
    if let Some(k) = levels.iter().position(|l| !l.is_positive()) {
        return Err(Error::NonpositiveLevel(k));
    }
    const NULL: usize = usize::MAX;
    let mut domain_of = vec![NULL; g.n()];
    for (k, dom) in dec.domains().enumerate() {
        for &v in dom {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: g.n(),
                });
            }
            domain_of[v] = k;
        }
    }

    // z_cross[a][b]: edges between positive domain a and negative domain b.
    // z_null[k]: edges between domain k and the null set.
    let mut z_cross = vec![vec![0usize; dec.r_neg()]; r_pos];
    let mut z_null = vec![0usize; r];
    for &(u, v) in g.edges() {
        let (a, b) = (domain_of[u], domain_of[v]);
        match (a == NULL, b == NULL) {
            (true, true) => {}
            (false, true) => z_null[a] += 1,
            (true, false) => z_null[b] += 1,
            (false, false) if a == b => {}
            (false, false) => {
                let (p, q) = if a < b { (a, b) } else { (b, a) };
                // distinct domains of the same sign are never adjacent
                if p >= r_pos || q < r_pos {
                    return Err(Error::InvalidDecomposition);
                }
                z_cross[p][q - r_pos] += 1;
            }
        }
    }

    let mut acc = Rat::ZERO;
    for (a, row) in z_cross.iter().enumerate() {
        for (b, &count) in row.iter().enumerate() {
            let term = levels[a].checked_add(&levels[r_pos + b])?;
            acc = acc.checked_add(&term.checked_mul(&Rat::from(count))?)?;
        }
    }
    for (k, &count) in z_null.iter().enumerate() {
        acc = acc.checked_add(&levels[k].checked_mul(&Rat::from(count))?)?;
    }
    Ok(acc)
}
