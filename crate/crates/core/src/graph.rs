//! Undirected simple graphs with a fixed vertex order and edge orientation.
//!
//! Every edge is stored once as `(head, tail)` with `head < tail`. The
//! orientation only matters for the sign convention of edge coefficients;
//! all spectral quantities are independent of it.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degree: Vec<usize>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

/// Connected-component labels, numbered by smallest contained vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentLabeling {
    pub component_id: Vec<usize>,
    pub count: usize,
}

impl ComponentLabeling {
    /// Vertex sets of each component, in id order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.component_id.iter().enumerate() {
            if c != usize::MAX {
                out[c].push(v);
            }
        }
        out
    }
}

impl Graph {
    /// Builds a canonical graph from unordered vertex pairs.
    ///
    /// Edges are oriented low to high and kept in the given order.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        let mut seen = HashSet::with_capacity(edge_list.len());
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut degree = vec![0usize; n];
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edge_list {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (head, tail) = if u < v { (u, v) } else { (v, u) };
            if !seen.insert((head, tail)) {
                return Err(Error::DuplicateEdge(head, tail));
            }
            let idx = edges.len();
            edges.push((head, tail));
            degree[head] += 1;
            degree[tail] += 1;
            adjacency[head].push((tail, idx));
            adjacency[tail].push((head, idx));
        }
        if let Some(i) = degree.iter().position(|&d| d == 0) {
            return Err(Error::IsolatedVertex(i));
        }
        Ok(Graph {
            n,
            edges,
            degree,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degree[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    /// Σ d_i, which is twice the edge count.
    pub fn volume(&self) -> usize {
        2 * self.edges.len()
    }

    /// `(neighbor, edge index)` pairs incident to `i`.
    pub fn neighbors(&self, i: usize) -> &[(usize, usize)] {
        &self.adjacency[i]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].iter().any(|&(w, _)| w == v)
    }

    /// Index of edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n {
            return None;
        }
        self.adjacency[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    /// The same graph with edges sorted lexicographically.
    pub fn canonical(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Graph::new(self.n, &edges).expect("canonical form of a valid graph")
    }

    pub fn connected_components(&self) -> ComponentLabeling {
        self.components_within(|_| true)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count == 1
    }

    /// Components of the subgraph induced by vertices satisfying `keep`.
    /// Vertices outside the subgraph get `usize::MAX`.
    pub(crate) fn components_within(&self, keep: impl Fn(usize) -> bool) -> ComponentLabeling {
        let mut component_id = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if component_id[s] != usize::MAX || !keep(s) {
                continue;
            }
            component_id[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adjacency[u] {
                    if component_id[w] == usize::MAX && keep(w) {
                        component_id[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        ComponentLabeling {
            component_id,
            count,
        }
    }

    /// Adjacency as one bitmask per vertex. Requires `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs n <= 64");
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    /// Disjoint union, relabeling `other` after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::new(self.n + other.n, &edges).expect("union of valid graphs")
    }
}

fn too_small(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::TooSmall { what, n, min })
    } else {
        Ok(())
    }
}

/// P_n: 0 - 1 - ... - (n-1).
pub fn path_graph(n: usize) -> Result<Graph> {
    too_small("path", n, 2)?;
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

/// C_n: the path plus the closing edge (0, n-1).
pub fn cycle_graph(n: usize) -> Result<Graph> {
    too_small("cycle", n, 3)?;
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Graph::new(n, &edges)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    too_small("complete graph", n, 3)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::new(n, &edges)
}

/// Hub 0 joined to leaves 1..n-1.
pub fn star_graph(n: usize) -> Result<Graph> {
    too_small("star", n, 2)?;
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges)
}

/// Outer 5-cycle 0..4, spokes i - (i+5), inner pentagram on 5..9.
pub fn petersen_graph() -> Graph {
    const EDGES: [(usize, usize); 15] = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
        (5, 7),
        (5, 8),
        (6, 8),
        (6, 9),
        (7, 9),
    ];
    Graph::new(10, &EDGES).expect("petersen edge list is valid")
}

/// Parses the edge-list text format.
///
/// Lines starting with `#` and blank lines are skipped. The first data line
/// is `n m`, followed by exactly `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace();
        let mut next = |name: &str| -> Result<usize> {
            let tok = it.next().ok_or_else(|| Error::Parse {
                line,
                msg: format!("missing {name}"),
            })?;
            tok.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("invalid {name} {tok:?}"),
            })
        };
        let a = next("first field")?;
        let b = next("second field")?;
        if let Some(extra) = it.next() {
            return Err(Error::Parse {
                line,
                msg: format!("unexpected trailing token {extra:?}"),
            });
        }
        Ok((a, b))
    };

    let (line, header) = data.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header line \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, l) = data.next().ok_or_else(|| Error::Parse {
            line: line + 1,
            msg: format!("expected {m} edges, found {}", edges.len()),
        })?;
        edges.push(parse_pair(line, l)?);
    }
    if let Some((line, _)) = data.next() {
        return Err(Error::Parse {
            line,
            msg: format!("more than {m} edge lines"),
        });
    }
    Graph::new(n, &edges)
}

/// Canonical edge-list text: header, then edges sorted with `u < v`.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut edges = g.edges.clone();
    edges.sort_unstable();
    let mut out = format!("{} {}\n", g.n, edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
