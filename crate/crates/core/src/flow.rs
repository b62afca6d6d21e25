//! Integer feasibility of lower-bounded circulations.
//!
//! A circulation problem with bounds `lower ≤ f ≤ upper` on each arc is
//! shifted to `0 ≤ f' ≤ upper − lower`, the mandatory `lower` flow becomes
//! node excess, and excesses are routed between a super-source and a
//! super-sink. The circulation exists iff the max flow saturates every
//! source arc. Max flow uses augmenting paths with capacity scaling.

use std::collections::VecDeque;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlowArc {
    pub from: usize,
    pub to: usize,
    pub lower: i128,
    pub upper: i128,
}

/// Circulation instance with integral bounds.
///
/// `scale` records the factor the rational bounds were multiplied by, so a
/// solution can be mapped back with [`FlowProblem::unscale`].
#[derive(Debug, Clone)]
pub struct FlowProblem {
    nodes: usize,
    arcs: Vec<FlowArc>,
    scale: i128,
}

impl FlowProblem {
    pub fn new(nodes: usize, scale: i128) -> Self {
        FlowProblem {
            nodes,
            arcs: Vec::new(),
            scale,
        }
    }

    /// Adds an arc and returns its index. Panics if `lower > upper`.
    pub fn add_arc(&mut self, from: usize, to: usize, lower: i128, upper: i128) -> usize {
        assert!(lower <= upper, "arc bounds out of order");
        assert!(from < self.nodes && to < self.nodes);
        self.arcs.push(FlowArc {
            from,
            to,
            lower,
            upper,
        });
        self.arcs.len() - 1
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn arcs(&self) -> &[FlowArc] {
        &self.arcs
    }

    pub fn scale(&self) -> i128 {
        self.scale
    }

    /// Rational value of an integral arc flow.
    pub fn unscale(&self, flow: i128) -> Result<Rat> {
        Rat::new(flow, self.scale)
    }

    /// A feasible circulation (one flow value per arc), or `None`.
    pub fn solve(&self) -> Result<Option<Vec<i128>>> {
        let source = self.nodes;
        let sink = self.nodes + 1;
        let mut net = Residual::new(self.nodes + 2);
        let mut excess = vec![0i128; self.nodes];
        let mut handles = Vec::with_capacity(self.arcs.len());
        for a in &self.arcs {
            let cap = a.upper.checked_sub(a.lower).ok_or(Error::Overflow)?;
            handles.push(net.add(a.from, a.to, cap));
            excess[a.to] = excess[a.to].checked_add(a.lower).ok_or(Error::Overflow)?;
            excess[a.from] = excess[a.from].checked_sub(a.lower).ok_or(Error::Overflow)?;
        }
        let mut required = 0i128;
        for (v, &ex) in excess.iter().enumerate() {
            if ex > 0 {
                net.add(source, v, ex);
                required = required.checked_add(ex).ok_or(Error::Overflow)?;
            } else if ex < 0 {
                net.add(v, sink, -ex);
            }
        }
        let pushed = net.max_flow(source, sink)?;
        if pushed < required {
            return Ok(None);
        }
        Ok(Some(
            handles
                .iter()
                .zip(&self.arcs)
                .map(|(&h, a)| a.lower + net.flow_on(h))
                .collect(),
        ))
    }
}

/// `lcm` that reports overflow instead of wrapping.
pub(crate) fn checked_lcm(a: i128, b: i128) -> Result<i128> {
    let g = a.gcd(&b);
    (a / g).checked_mul(b).map(i128::abs).ok_or(Error::Overflow)
}

struct Residual {
    head: Vec<usize>,
    cap: Vec<i128>,
    original: Vec<i128>,
    adj: Vec<Vec<usize>>,
}

impl Residual {
    fn new(n: usize) -> Self {
        Residual {
            head: Vec::new(),
            cap: Vec::new(),
            original: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: i128) -> usize {
        let e = self.head.len();
        self.head.extend([to, from]);
        self.cap.extend([cap, 0]);
        self.original.extend([cap, 0]);
        self.adj[from].push(e);
        self.adj[to].push(e + 1);
        e
    }

    fn flow_on(&self, e: usize) -> i128 {
        self.original[e] - self.cap[e]
    }

    /// Shortest augmenting path using only arcs with residual ≥ `delta`.
    fn find_path(&self, s: usize, t: usize, delta: i128, parent: &mut [usize]) -> bool {
        parent.fill(usize::MAX);
        let mut queue = VecDeque::from([s]);
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if !seen[v] && self.cap[e] >= delta {
                    seen[v] = true;
                    parent[v] = e;
                    if v == t {
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        false
    }

    fn max_flow(&mut self, s: usize, t: usize) -> Result<i128> {
        let max_cap = self.cap.iter().copied().max().unwrap_or(0);
        if max_cap <= 0 {
            return Ok(0);
        }
        let mut delta: i128 = 1;
        while delta <= max_cap / 2 {
            delta *= 2;
        }
        let mut parent = vec![usize::MAX; self.adj.len()];
        let mut total = 0i128;
        while delta >= 1 {
            while self.find_path(s, t, delta, &mut parent) {
                let mut bottleneck = i128::MAX;
                let mut v = t;
                while v != s {
                    let e = parent[v];
                    bottleneck = bottleneck.min(self.cap[e]);
                    v = self.head[e ^ 1];
                }
                let mut v = t;
                while v != s {
                    let e = parent[v];
                    self.cap[e] -= bottleneck;
                    self.cap[e ^ 1] += bottleneck;
                    v = self.head[e ^ 1];
                }
                total = total.checked_add(bottleneck).ok_or(Error::Overflow)?;
            }
            delta /= 2;
        }
        Ok(total)
    }
}
