//! Certification of 1-Laplacian eigenpairs.
//!
//! `(μ, x)` is an eigenpair when there are antisymmetric edge values
//! `z_ij ∈ Sgn(x_i − x_j)` with `Σ_{j∼i} z_ij ∈ μ d_i Sgn(x_i)` at every
//! vertex, where `Sgn(0) = [−1, 1]`. Edges whose endpoints differ have `z`
//! forced to ±1; the remaining edges carry `z ∈ [−1, 1]`, and the vertex
//! conditions become interval bounds on the divergence of those free edges.
//! That is a lower-bounded circulation, decided exactly with integer max
//! flow after clearing denominators.

use crate::error::{Error, Result};
use crate::flow::{checked_lcm, FlowProblem};
use crate::graph::Graph;
use crate::rational::Rat;
use crate::tv::{tv_energy, weighted_norm, VertexFunction};

/// Edge values witnessing an eigenpair.
///
/// `z[e]` belongs to the canonical orientation of edge `e`; the reverse
/// direction carries `−z[e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub mu: Rat,
    pub z: Vec<Rat>,
}

impl Certificate {
    /// Divergence `Σ_{j∼i} z_ij` at each vertex.
    pub fn divergence(&self, g: &Graph) -> Vec<Rat> {
        let mut div = vec![Rat::ZERO; g.n()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            div[u] = div[u] + self.z[e];
            div[v] = div[v] - self.z[e];
        }
        div
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

/// Direct check of every eigen-system condition in exact arithmetic.
pub fn check_certificate(g: &Graph, x: &VertexFunction, cert: &Certificate) -> Result<bool> {
    check_len(g, x)?;
    if cert.z.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            found: cert.z.len(),
        });
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let z = cert.z[e];
        if z.abs() > Rat::ONE {
            return Ok(false);
        }
        let admissible = match x[u].cmp(&x[v]) {
            std::cmp::Ordering::Greater => z == Rat::ONE,
            std::cmp::Ordering::Less => z == -Rat::ONE,
            std::cmp::Ordering::Equal => true,
        };
        if !admissible {
            return Ok(false);
        }
    }
    let div = cert.divergence(g);
    for (i, d) in div.iter().enumerate() {
        let bound = cert.mu * Rat::from(g.degree(i));
        let ok = match x[i].signum() {
            0 => d.abs() <= bound && !bound.is_negative(),
            s => *d == bound * Rat::int(s as i64),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether `(μ, x)` is an eigenpair and returns a certificate if so.
///
/// `x` need not be normalized: the system only depends on signs of `x_i`
/// and of `x_i − x_j`. Returns `Ok(None)` when no certificate exists.
pub fn verify_eigenpair(g: &Graph, mu: Rat, x: &VertexFunction) -> Result<Option<Certificate>> {
    verify_eigenpair_oriented(g, mu, x, &vec![false; g.m()])
}

/// As [`verify_eigenpair`], but building the flow network with edge `e`
/// oriented tail→head wherever `flipped[e]` is set. The returned
/// certificate is always expressed in the canonical orientation.
pub fn verify_eigenpair_oriented(
    g: &Graph,
    mu: Rat,
    x: &VertexFunction,
    flipped: &[bool],
) -> Result<Option<Certificate>> {
    check_len(g, x)?;
    if flipped.len() != g.m() {
        return Err(Error::LengthMismatch {
            expected: g.m(),
            found: flipped.len(),
        });
    }
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = g.n();

    // Forced edges and their contribution to each vertex's divergence.
    let mut z = vec![Rat::ZERO; g.m()];
    let mut forced_div = vec![0i64; n];
    let mut free = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (head, tail) = if flipped[e] { (v, u) } else { (u, v) };
        match x[head].cmp(&x[tail]) {
            std::cmp::Ordering::Equal => free.push((e, head, tail)),
            ord => {
                let s: i64 = if ord == std::cmp::Ordering::Greater {
                    1
                } else {
                    -1
                };
                forced_div[head] += s;
                forced_div[tail] -= s;
                // canonical z has the sign of x_u − x_v
                z[e] = Rat::int(if flipped[e] { -s } else { s });
            }
        }
    }

    // Interval each vertex's free-edge divergence must land in.
    let mut bounds = Vec::with_capacity(n);
    let mut scale: i128 = 1;
    for i in 0..n {
        let weight = mu.checked_mul(&Rat::from(g.degree(i)))?;
        let forced = Rat::int(forced_div[i]);
        let (lo, hi) = match x[i].signum() {
            0 => (
                (-weight).checked_sub(&forced)?,
                weight.checked_sub(&forced)?,
            ),
            s => {
                let target = weight
                    .checked_mul(&Rat::int(s as i64))?
                    .checked_sub(&forced)?;
                (target, target)
            }
        };
        if lo > hi {
            return Ok(None);
        }
        scale = checked_lcm(scale, lo.denom())?;
        scale = checked_lcm(scale, hi.denom())?;
        bounds.push((lo, hi));
    }

    let to_int = |r: Rat| -> Result<i128> {
        r.checked_mul(&Rat::new(scale, 1)?)?
            .to_integer()
            .ok_or(Error::Overflow)
    };

    // Nodes: graph vertices, then a hub feeding each vertex its divergence.
    let hub = n;
    let mut problem = FlowProblem::new(n + 1, scale);
    let mut free_arcs = Vec::with_capacity(free.len());
    // z = forward − backward, each in [0, 1]
    for &(e, head, tail) in &free {
        let forward = problem.add_arc(head, tail, 0, scale);
        let backward = problem.add_arc(tail, head, 0, scale);
        free_arcs.push((e, forward, backward));
    }
    for (i, &(lo, hi)) in bounds.iter().enumerate() {
        problem.add_arc(hub, i, to_int(lo)?, to_int(hi)?);
    }

    let Some(flow) = problem.solve()? else {
        return Ok(None);
    };
    for (e, forward, backward) in free_arcs {
        let value = problem.unscale(flow[forward] - flow[backward])?;
        z[e] = if flipped[e] { -value } else { value };
    }
    Ok(Some(Certificate { mu, z }))
}

/// Tests whether `x` is an eigenvector. The only possible eigenvalue is the
/// energy of `x` rescaled onto the constraint sphere.
pub fn is_eigenvector(g: &Graph, x: &VertexFunction) -> Result<Option<Certificate>> {
    let norm = weighted_norm(g, x)?;
    if norm.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mu = tv_energy(g, x)?.checked_div(&norm)?;
    verify_eigenpair(g, mu, x)
}
