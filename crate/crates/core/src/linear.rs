//! Spectrum of the normalized graph Laplacian `I − D^{-1/2} A D^{-1/2}`.
//!
//! Its eigenvalues are those of the generalized problem `Lφ = λDφ`; the
//! generalized eigenvectors are recovered as `D^{-1/2} v`. Solved with
//! cyclic Jacobi rotations, which is plenty for the graph sizes here.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Stop once the off-diagonal Frobenius norm drops below this.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct LinearSpectrum {
    /// Ascending, length n.
    pub eigenvalues: Vec<f64>,
    /// Generalized eigenvectors `φ_k`, aligned with `eigenvalues`.
    pub eigenvectors: Vec<Vec<f64>>,
    pub tolerance: f64,
}

impl LinearSpectrum {
    pub fn lambda2(&self) -> f64 {
        self.eigenvalues[1.min(self.eigenvalues.len() - 1)]
    }

    /// Generalized eigenvector for λ₂.
    pub fn fiedler_vector(&self) -> &[f64] {
        &self.eigenvectors[1.min(self.eigenvectors.len() - 1)]
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

pub fn normalized_laplacian(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let inv_sqrt: Vec<f64> = g
        .degrees()
        .iter()
        .map(|&d| 1.0 / (d as f64).sqrt())
        .collect();
    let mut a = vec![vec![0.0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for &(u, v) in g.edges() {
        let w = -inv_sqrt[u] * inv_sqrt[v];
        a[u][v] = w;
        a[v][u] = w;
    }
    a
}

pub fn linear_spectrum(g: &Graph) -> Result<LinearSpectrum> {
    let (values, vectors) = jacobi_eigen(normalized_laplacian(g))?;
    let inv_sqrt: Vec<f64> = g
        .degrees()
        .iter()
        .map(|&d| 1.0 / (d as f64).sqrt())
        .collect();
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    Ok(LinearSpectrum {
        eigenvalues: order.iter().map(|&k| values[k]).collect(),
        eigenvectors: order
            .iter()
            .map(|&k| {
                vectors
                    .iter()
                    .zip(&inv_sqrt)
                    .map(|(row, s)| row[k] * s)
                    .collect()
            })
            .collect(),
        tolerance: JACOBI_TOLERANCE,
    })
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j {
                s += v * v;
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi on a symmetric matrix. Returns unsorted eigenvalues and the
/// matrix whose columns are the orthonormal eigenvectors.
pub fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = a.len();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let mut sweeps = 0;
    while off_diagonal_norm(&a) >= JACOBI_TOLERANCE {
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let akp = row[p];
                    let akq = row[q];
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                let (upper, lower) = a.split_at_mut(q);
                for (apk, aqk) in upper[p].iter_mut().zip(lower[0].iter_mut()) {
                    let (x, y) = (*apk, *aqk);
                    *apk = c * x - s * y;
                    *aqk = s * x + c * y;
                }
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    Ok(((0..n).map(|i| a[i][i]).collect(), v))
}
