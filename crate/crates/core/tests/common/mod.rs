#![allow(dead_code)]

pub mod checks;

use std::collections::BTreeSet;

use onelap::graph::Graph;
use onelap::rational::Rat;
use onelap::tv::VertexFunction;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = BTreeSet::new();
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        let child = order[k];
        edges.insert((parent.min(child), parent.max(child)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::new(n, &edges).expect("spanning tree has no isolated vertex")
}

/// Disjoint union of `parts` random connected graphs whose sizes sum to at
/// most `max_total`.
pub fn random_forest_of_components(rng: &mut ChaCha8Rng, parts: usize, max_total: usize) -> Graph {
    let mut g: Option<Graph> = None;
    let mut budget = max_total;
    for k in 0..parts {
        let remaining = parts - k - 1;
        let size = rng.gen_range(2..=budget - 2 * remaining);
        budget -= size;
        let h = random_connected_graph(rng, size, 0.4);
        g = Some(match g {
            None => h,
            Some(g) => g.disjoint_union(&h),
        });
    }
    g.expect("at least one part")
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn is_connected_mask(n: usize, adj: &[u32]) -> bool {
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        for (v, &nbrs) in adj.iter().enumerate().take(n) {
            if frontier & (1 << v) != 0 {
                next |= nbrs;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == (1u32 << n) - 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices: the smallest edge mask of each class, with every relabelling of
/// a found class marked as seen.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!((2..=7).contains(&n));
    let pairs = pair_index(n);
    let slot = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let relabel: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| slot(p[u], p[v])).collect())
        .collect();
    let mut seen = vec![false; 1 << pairs.len()];
    let mut graphs = Vec::new();
    for mask in 1u64..(1u64 << pairs.len()) {
        if seen[mask as usize] {
            continue;
        }
        for map in &relabel {
            let image = map
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask & (1 << k) != 0)
                .fold(0u64, |acc, (_, &s)| acc | (1 << s));
            seen[image as usize] = true;
        }
        let mut adj = vec![0u32; n];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if !is_connected_mask(n, &adj) {
            continue;
        }
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e)
            .collect();
        graphs.push(Graph::new(n, &edges).unwrap());
    }
    graphs
}

pub fn random_signs(rng: &mut ChaCha8Rng, n: usize) -> Vec<i8> {
    loop {
        let s: Vec<i8> = (0..n).map(|_| rng.gen_range(-1..=1)).collect();
        if s.iter().any(|&v| v != 0) {
            return s;
        }
    }
}

pub fn random_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    Rat::frac(
        rng.gen_range(-max_num..=max_num),
        rng.gen_range(1..=max_den),
    )
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> VertexFunction {
    loop {
        let x = VertexFunction::new((0..n).map(|_| random_rational(rng, 6, 5)).collect());
        if !x.is_zero() {
            return x;
        }
    }
}

/// Independent decision procedure for the eigen system.
///
/// Forced edges are fixed at ±1. The free edges must then realise a
/// divergence inside `[lo_i, hi_i]` at every vertex with `z ∈ [−1, 1]`. By
/// Hoffman's circulation theorem this is feasible exactly when every vertex
/// subset S satisfies `Σ_S lo ≤ c(S)` and `Σ_S hi ≥ −c(S)`, where `c(S)` is
/// the number of free edges leaving S.
pub fn cut_condition_oracle(g: &Graph, mu: Rat, x: &VertexFunction) -> bool {
    let n = g.n();
    assert!(n <= 20);
    let mut forced = vec![Rat::ZERO; n];
    let mut free = Vec::new();
    for &(u, v) in g.edges() {
        if x[u] == x[v] {
            free.push((u, v));
        } else {
            let s = if x[u] > x[v] { Rat::ONE } else { -Rat::ONE };
            forced[u] = forced[u] + s;
            forced[v] = forced[v] - s;
        }
    }
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for i in 0..n {
        let w = mu * Rat::from(g.degree(i));
        if x[i].is_zero() {
            lo.push(-w - forced[i]);
            hi.push(w - forced[i]);
        } else {
            let t = w * Rat::int(x[i].signum() as i64) - forced[i];
            lo.push(t);
            hi.push(t);
        }
        if lo[i] > hi[i] {
            return false;
        }
    }
    for mask in 1u32..(1u32 << n) {
        let inside = |v: usize| mask & (1 << v) != 0;
        let crossing = free
            .iter()
            .filter(|&&(u, v)| inside(u) != inside(v))
            .count();
        let c = Rat::from(crossing);
        let sum_lo: Rat = (0..n).filter(|&v| inside(v)).map(|v| lo[v]).sum();
        let sum_hi: Rat = (0..n).filter(|&v| inside(v)).map(|v| hi[v]).sum();
        if sum_lo > c || sum_hi < -c {
            return false;
        }
    }
    true
}
