//! Cheeger constant, the π-minimization route to μ₂, sweep cuts and
//! eigenvalue bounds.
//!
//! `h(G) = min_S |E(S, S̄)| / min(vol S, vol S̄)` over nonempty proper S.
//! For connected graphs it coincides with the second 1-Laplacian eigenvalue,
//! which is also `min { I(x) : x ∈ π }`.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Hypothesis, Result};
use crate::graph::Graph;
use crate::linear::linear_spectrum;
use crate::rational::Rat;
use crate::spectrum::{index_chunks, EnumConfig};
use crate::tv::{signs_in_pi, TernaryPattern, VertexFunction};

/// Largest vertex count [`cheeger_exact`] enumerates.
pub const MAX_CUT_VERTICES: usize = 24;

/// Slack for comparisons involving floating-point λ₂.
pub const CHEEGER_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub subset: Vec<usize>,
    pub boundary_size: usize,
    pub vol_s: usize,
    pub vol_sbar: usize,
    pub ratio: Rat,
}

impl Cut {
    /// Cut induced by a nonempty proper vertex subset.
    pub fn from_subset(g: &Graph, subset: &[usize]) -> Result<Cut> {
        let mut inside = vec![false; g.n()];
        for &v in subset {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: g.n(),
                });
            }
            inside[v] = true;
        }
        let size = inside.iter().filter(|&&b| b).count();
        if size == 0 || size == g.n() {
            return Err(Error::InvalidConfig(
                "cut subset must be nonempty and proper".into(),
            ));
        }
        let boundary_size = g
            .edges()
            .iter()
            .filter(|&&(u, v)| inside[u] != inside[v])
            .count();
        let vol_s: usize = (0..g.n()).filter(|&v| inside[v]).map(|v| g.degree(v)).sum();
        let vol_sbar = g.volume() - vol_s;
        Ok(Cut {
            subset: (0..g.n()).filter(|&v| inside[v]).collect(),
            boundary_size,
            vol_s,
            vol_sbar,
            ratio: Rat::new(boundary_size as i128, vol_s.min(vol_sbar) as i128)?,
        })
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Compares `a/b` with `c/d` for positive denominators, without division.
fn ratio_cmp(a: usize, b: usize, c: usize, d: usize) -> Ordering {
    (a as u128 * d as u128).cmp(&(c as u128 * b as u128))
}

/// Exact Cheeger constant by enumerating every subset containing vertex 0.
/// Ties go to the numerically smallest subset bitmask.
pub fn cheeger_exact(g: &Graph) -> Result<(Rat, Cut)> {
    require_connected(g)?;
    let n = g.n();
    if n > MAX_CUT_VERTICES {
        return Err(Error::TooLarge {
            n,
            max_n: MAX_CUT_VERTICES,
        });
    }
    let adj = g.adjacency_masks();
    let deg = g.degrees().to_vec();
    let total_vol = g.volume();
    let full: u64 = (1u64 << n) - 1;
    // S = 1 | (k << 1); k = 2^(n-1) − 1 would be the whole vertex set
    let count = (1u64 << (n - 1)) - 1;

    let best_in = |start: u64, end: u64| -> Option<(usize, usize, u64)> {
        let mut best: Option<(usize, usize, u64)> = None;
        for k in start..end {
            let s = 1 | (k << 1);
            let mut boundary = 0usize;
            let mut vol = 0usize;
            let mut rest = s;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                boundary += (adj[i] & !s & full).count_ones() as usize;
                vol += deg[i];
            }
            let denom = vol.min(total_vol - vol);
            let better = match best {
                None => true,
                Some((bb, bd, bs)) => match ratio_cmp(boundary, denom, bb, bd) {
                    Ordering::Less => true,
                    Ordering::Equal => s < bs,
                    Ordering::Greater => false,
                },
            };
            if better {
                best = Some((boundary, denom, s));
            }
        }
        best
    };

    let chunks = index_chunks(count, 1 << 14);
    let partial: Vec<_> = chunks.par_iter().map(|&(a, b)| best_in(a, b)).collect();
    let (_, _, mask) = partial
        .into_iter()
        .flatten()
        .min_by(|x, y| ratio_cmp(x.0, x.1, y.0, y.1).then(x.2.cmp(&y.2)))
        .expect("a connected graph with n >= 2 has a cut");
    let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
    let cut = Cut::from_subset(g, &subset)?;
    Ok((cut.ratio, cut))
}

/// Order on `(jumps, δ, index)`: energy, then larger δ, then index.
fn pi_order(x: &(usize, usize, u64), y: &(usize, usize, u64)) -> Ordering {
    ratio_cmp(x.0, x.1, y.0, y.1)
        .then(y.1.cmp(&x.1))
        .then(x.2.cmp(&y.2))
}

/// μ₂ as the minimum energy over normal vectors in π.
/// Ties go to the largest support volume δ, then the smallest base-3 index.
pub fn mu2_via_pi_min(g: &Graph, cfg: &EnumConfig) -> Result<(Rat, TernaryPattern)> {
    require_connected(g)?;
    cfg.validate()?;
    let n = g.n();
    if n > cfg.max_n.min(40) {
        return Err(Error::TooLarge {
            n,
            max_n: cfg.max_n.min(40),
        });
    }
    let total = 3u64.pow(n as u32);
    let chunks = index_chunks(total, cfg.chunk_size);

    // energy of δ⁻¹p is (Σ_edges |p_u − p_v|) / δ
    let scan = |start: u64, end: u64| -> Option<(usize, usize, u64)> {
        let mut best: Option<(usize, usize, u64)> = None;
        for index in start..end {
            let Some(p) = TernaryPattern::from_index(index, n) else {
                continue;
            };
            let s = p.signs();
            if !signs_in_pi(g, s) {
                continue;
            }
            let jumps: usize = g
                .edges()
                .iter()
                .map(|&(u, v)| (s[u] - s[v]).unsigned_abs() as usize)
                .sum();
            let delta: usize = (0..n).filter(|&v| s[v] != 0).map(|v| g.degree(v)).sum();
            let candidate = (jumps, delta, index);
            if best.is_none_or(|b| pi_order(&candidate, &b) == Ordering::Less) {
                best = Some(candidate);
            }
        }
        best
    };
    let partial: Vec<_> = cfg.install(|| chunks.par_iter().map(|&(a, b)| scan(a, b)).collect())?;
    let (jumps, delta, index) = partial
        .into_iter()
        .flatten()
        .min_by(pi_order)
        .ok_or_else(|| Error::InvalidConfig("no pattern lies in π".into()))?;
    let pattern =
        TernaryPattern::from_index(index, n).expect("index came from a canonical pattern");
    Ok((Rat::new(jumps as i128, delta as i128)?, pattern))
}

fn sweep<T: PartialOrd>(g: &Graph, y: &[T]) -> Result<(Rat, Cut)> {
    if y.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: y.len(),
        });
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| {
        y[b].partial_cmp(&y[a])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    let mut best: Option<Cut> = None;
    for k in 1..order.len() {
        // threshold between distinct values only
        if y[order[k - 1]].partial_cmp(&y[order[k]]) != Some(Ordering::Greater) {
            continue;
        }
        let cut = Cut::from_subset(g, &order[..k])?;
        if best.as_ref().is_none_or(|b| cut.ratio < b.ratio) {
            best = Some(cut);
        }
    }
    let cut = best.ok_or(Error::ConstantVector)?;
    Ok((cut.ratio, cut))
}

/// Best Cheeger ratio among the level-set cuts `{i : y_i ≥ t}` of `y`.
pub fn sweep_cut(g: &Graph, y: &VertexFunction) -> Result<(Rat, Cut)> {
    sweep(g, y.values())
}

/// [`sweep_cut`] for a floating-point vector such as a Fiedler vector.
pub fn sweep_cut_f64(g: &Graph, y: &[f64]) -> Result<(Rat, Cut)> {
    if y.iter().any(|v| v.is_nan()) {
        return Err(Error::InvalidConfig("NaN in sweep vector".into()));
    }
    sweep(g, y)
}

/// `(λ₂, h, ok)` where ok means `λ₂/2 ≤ h ≤ √(2λ₂)` up to [`CHEEGER_SLACK`].
pub fn cheeger_inequality_check(g: &Graph) -> Result<(f64, Rat, bool)> {
    let (h, _) = cheeger_exact(g)?;
    let lambda2 = linear_spectrum(g)?.lambda2();
    let hf = h.to_f64();
    let ok = lambda2 / 2.0 <= hf + CHEEGER_SLACK && hf <= (2.0 * lambda2).sqrt() + CHEEGER_SLACK;
    Ok((lambda2, h, ok))
}

/// `(2/Σd_i, (n−2)/(n−1))`, the range containing every eigenvalue in (0, 1).
pub fn eigenvalue_range_bound(g: &Graph) -> Result<(Rat, Rat)> {
    if g.n() < 3 {
        return Err(Error::TooSmall {
            what: "eigenvalue range bound",
            n: g.n(),
            min: 3,
        });
    }
    require_connected(g)?;
    Ok((
        Rat::new(2, g.volume() as i128)?,
        Rat::new(g.n() as i128 - 2, g.n() as i128 - 1)?,
    ))
}

/// `1 − 1/(2c)` for disjoint groups of equal volume `c`, at least one of
/// which contains an adjacent pair. An upper bound on μ₂.
pub fn group_upper_bound(g: &Graph, group_a: &[usize], group_b: &[usize]) -> Result<Rat> {
    if group_a.is_empty() || group_b.is_empty() {
        return Err(Error::HypothesisViolated(Hypothesis::EmptyGroup));
    }
    for &v in group_a.iter().chain(group_b) {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
    }
    if let Some(&v) = group_a.iter().find(|v| group_b.contains(v)) {
        return Err(Error::HypothesisViolated(Hypothesis::Overlap(v)));
    }
    let vol = |s: &[usize]| -> usize { s.iter().map(|&v| g.degree(v)).sum() };
    let (a, b) = (vol(group_a), vol(group_b));
    if a != b {
        return Err(Error::HypothesisViolated(Hypothesis::UnequalVolume {
            a,
            b,
        }));
    }
    let has_pair = |s: &[usize]| {
        s.iter()
            .any(|&u| s.iter().any(|&v| u < v && g.has_edge(u, v)))
    };
    if !has_pair(group_a) && !has_pair(group_b) {
        return Err(Error::HypothesisViolated(Hypothesis::NoInternalEdge));
    }
    Ok(Rat::ONE - Rat::new(1, 2 * a as i128)?)
}
