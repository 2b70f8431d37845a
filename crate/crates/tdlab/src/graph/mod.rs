//! Finite simple graphs on at most 64 vertices, stored as adjacency bitsets.
//!
//! Vertices are `0..n`; the neighborhood of each vertex is a `u64` mask, so
//! the subset sweeps in [`crate::tds`] reduce to a handful of word ops per
//! candidate set.

mod enumerate;
mod family;
mod ops;

pub use enumerate::{graph_from_edge_mask, pair_count, SmallGraphs, MAX_ENUM_ORDER};
pub use family::{build_family, gadget_outer_mask, FamilySpec};
pub use ops::{corona, disjoint_union, join, lexicographic};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Hard cap imposed by the bitset representation.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge { n: usize },
    #[error("graphs must have at least one vertex")]
    Empty,
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} is not allowed in a simple graph")]
    Loop { v: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    // line 0 means the failure predates line-by-line parsing (unreadable file).
    #[error("{}: {reason}", if *.line == 0 { "edge list".to_string() } else { format!("edge list line {line}") })]
    Parse { line: usize, reason: String },
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("exhaustive enumeration is limited to order {MAX_ENUM_ORDER}, got {n}")]
    EnumerationTooLarge { n: usize },
}

/// A simple undirected graph with adjacency bitsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Degree and structure summary used throughout the verification reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub order: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    /// Vertices adjacent to at least one leaf.
    pub support_count: usize,
    /// Vertices of degree one.
    pub leaf_count: usize,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::Loop { v });
        }
        if self.adj[u] >> v & 1 == 1 {
            return Err(GraphError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Open neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Mask with one bit per vertex.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            // neighbors strictly above u, so each edge appears once
            let mut higher = if u + 1 < 64 { self.adj[u] >> (u + 1) << (u + 1) } else { 0 };
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|&m| m == 0)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        loop {
            let mut grown = seen;
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                grown |= self.adj[v];
            }
            if grown == seen {
                break;
            }
            seen = grown;
        }
        seen == self.full_mask()
    }

    /// Union of the open neighborhoods of the vertices in `mask`.
    pub fn neighborhood_of_set(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= self.adj[v];
        }
        out
    }

    /// Number of vertices adjacent to a degree-one vertex.
    pub fn support_count(&self) -> usize {
        let mut supports = 0u64;
        for v in 0..self.n {
            if self.degree(v) == 1 {
                supports |= self.adj[v];
            }
        }
        supports.count_ones() as usize
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 1).count()
    }

    pub fn metrics(&self) -> GraphMetrics {
        GraphMetrics {
            order: self.n,
            edges: self.edge_count(),
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            connected: self.is_connected(),
            support_count: self.support_count(),
            leaf_count: self.leaf_count(),
        }
    }

    /// Parses the plain edge-list format: first non-comment line `n m`,
    /// then `m` lines `u v`. `#` starts a comment; blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut graph: Option<Graph> = None;
        let mut edges_seen = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(GraphError::Parse {
                    line: line_no,
                    reason: format!("expected two integers, found {:?}", line),
                });
            }
            let a = fields[0].parse::<usize>().map_err(|e| GraphError::Parse {
                line: line_no,
                reason: format!("bad integer {:?}: {e}", fields[0]),
            })?;
            let b = fields[1].parse::<usize>().map_err(|e| GraphError::Parse {
                line: line_no,
                reason: format!("bad integer {:?}: {e}", fields[1]),
            })?;
            match (&header, &mut graph) {
                (None, _) => {
                    header = Some((a, b));
                    graph = Some(Graph::new(a)?);
                }
                (Some((_, m)), Some(g)) => {
                    let m = *m;
                    if edges_seen == m {
                        return Err(GraphError::Parse {
                            line: line_no,
                            reason: format!("more than the declared {m} edges"),
                        });
                    }
                    g.add_edge(a, b)?;
                    edges_seen += 1;
                }
                _ => unreachable!("header implies graph"),
            }
        }
        let (_, m) = header.ok_or(GraphError::Parse {
            line: 0,
            reason: "empty input: missing `n m` header".to_string(),
        })?;
        if edges_seen != m {
            return Err(GraphError::Parse {
                line: 0,
                reason: format!("declared {m} edges but found {edges_seen}"),
            });
        }
        Ok(graph.expect("header implies graph"))
    }

    /// Canonical edge-list serialization accepted by [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_validation() {
        assert_eq!(Graph::new(0).unwrap_err(), GraphError::Empty);
        assert_eq!(Graph::new(65).unwrap_err(), GraphError::TooLarge { n: 65 });
        let mut g = Graph::new(3).unwrap();
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0).unwrap_err(), GraphError::DuplicateEdge { u: 0, v: 1 });
        assert_eq!(g.add_edge(2, 2).unwrap_err(), GraphError::Loop { v: 2 });
        assert_eq!(
            g.add_edge(1, 3).unwrap_err(),
            GraphError::VertexOutOfRange { v: 3, n: 3 }
        );
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn metrics_on_a_path() {
        // P_4: 0-1-2-3
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = g.metrics();
        assert_eq!(m.order, 4);
        assert_eq!(m.edges, 3);
        assert_eq!(m.min_degree, 1);
        assert_eq!(m.max_degree, 2);
        assert!(m.connected);
        assert_eq!(m.leaf_count, 2);
        assert_eq!(m.support_count, 2); // vertices 1 and 2
    }

    #[test]
    fn support_counts_star_and_triangle() {
        // K_{1,3}: center 0 is the only support vertex.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.support_count(), 1);
        assert_eq!(star.leaf_count(), 3);
        // Triangle has no leaves.
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.support_count(), 0);
        assert_eq!(tri.leaf_count(), 0);
    }

    #[test]
    fn connectivity() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        let h = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(h.is_connected());
        let single = Graph::new(1).unwrap();
        assert!(single.is_connected());
    }

    #[test]
    fn neighborhood_of_set_unions_open_neighborhoods() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        // N({1, 2}) = {0, 1, 2, 3}
        assert_eq!(g.neighborhood_of_set(0b0110), 0b1111);
        // N({0}) = {1}
        assert_eq!(g.neighborhood_of_set(0b0001), 0b0010);
        assert_eq!(g.neighborhood_of_set(0), 0);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (3, 4), (1, 4)]).unwrap();
        let text = g.to_edge_list();
        let h = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn edge_list_parsing_rejects_malformed_input() {
        assert!(matches!(
            Graph::parse_edge_list(""),
            Err(GraphError::Parse { .. })
        ));
        // wrong edge count
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::Parse { .. })
        ));
        // extra edges beyond the declared count
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(GraphError::Parse { .. })
        ));
        // duplicate edge
        assert_eq!(
            Graph::parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err(),
            GraphError::DuplicateEdge { u: 0, v: 1 }
        );
        // out-of-range vertex
        assert_eq!(
            Graph::parse_edge_list("3 1\n0 3\n").unwrap_err(),
            GraphError::VertexOutOfRange { v: 3, n: 3 }
        );
        // comments and blank lines are fine
        let g = Graph::parse_edge_list("# triangle\n3 3\n\n0 1 # first\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }
}
