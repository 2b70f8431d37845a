//! Exhaustive enumeration of labeled graphs of small order.
//!
//! Every graph on `n` vertices corresponds to one adjacency mask over the
//! `n(n-1)/2` vertex pairs; the stream walks masks in increasing order and
//! applies the requested filters. No isomorphism reduction: labeled
//! redundancy is cheap at this scale and keeps the generator trivial to
//! partition for parallel scans.

use super::{Graph, GraphError};

/// Largest order the exhaustive corpus supports (2^21 masks at n = 7).
pub const MAX_ENUM_ORDER: usize = 7;

/// Number of vertex pairs, i.e. bits in an adjacency mask.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Decodes an adjacency mask into a graph. Pair bits are ordered
/// colexicographically: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), …
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n).expect("enumeration order is validated upstream");
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).expect("each pair occurs once");
            }
            bit += 1;
        }
    }
    g
}

/// Stream of every labeled graph on `n` vertices matching the filters.
#[derive(Debug)]
pub struct SmallGraphs {
    n: usize,
    connected_only: bool,
    min_degree: usize,
    next_mask: u64,
    end_mask: u64,
}

impl SmallGraphs {
    pub fn new(n: usize, connected_only: bool, min_degree: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_ENUM_ORDER {
            return Err(GraphError::EnumerationTooLarge { n });
        }
        Ok(SmallGraphs {
            n,
            connected_only,
            min_degree,
            next_mask: 0,
            end_mask: 1u64 << pair_count(n),
        })
    }

    /// Restricts the stream to masks in `[start, end)` — the unit of
    /// parallel partitioning.
    pub fn mask_range(mut self, start: u64, end: u64) -> Self {
        self.next_mask = start;
        self.end_mask = self.end_mask.min(end);
        self
    }

    /// Total number of adjacency masks for this order (all graphs, before
    /// filtering).
    pub fn mask_count(n: usize) -> u64 {
        1u64 << pair_count(n)
    }
}

impl Iterator for SmallGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end_mask {
            let g = graph_from_edge_mask(self.n, self.next_mask);
            self.next_mask += 1;
            if self.min_degree > 0 && g.min_degree() < self.min_degree {
                continue;
            }
            if self.connected_only && !g.is_connected() {
                continue;
            }
            return Some(g);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_decoding_is_colexicographic() {
        // mask 0b1 sets pair (0,1); 0b100 sets pair (1,2).
        let g = graph_from_edge_mask(3, 0b101);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn connected_counts_match_known_values() {
        // Labeled connected graphs on n vertices: 1, 1, 4, 38, 728 for
        // n = 1, 2, 3, 4, 5.
        let expected = [(1, 1usize), (2, 1), (3, 4), (4, 38), (5, 728)];
        for (n, count) in expected {
            let got = SmallGraphs::new(n, true, 0).unwrap().count();
            assert_eq!(got, count, "n={n}");
        }
    }

    #[test]
    fn n3_connected_graphs_are_three_paths_and_a_triangle() {
        let graphs: Vec<Graph> = SmallGraphs::new(3, true, 0).unwrap().collect();
        assert_eq!(graphs.len(), 4);
        let triangles = graphs.iter().filter(|g| g.edge_count() == 3).count();
        let paths = graphs.iter().filter(|g| g.edge_count() == 2).count();
        assert_eq!((triangles, paths), (1, 3));
    }

    #[test]
    fn min_degree_filter() {
        // Only K_4 has δ = 3 on four vertices.
        let graphs: Vec<Graph> = SmallGraphs::new(4, false, 3).unwrap().collect();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].edge_count(), 6);
        // n=2 connected: exactly K_2.
        let graphs: Vec<Graph> = SmallGraphs::new(2, true, 0).unwrap().collect();
        assert_eq!(graphs.len(), 1);
        assert!(graphs[0].has_edge(0, 1));
    }

    #[test]
    fn refuses_large_orders() {
        assert_eq!(
            SmallGraphs::new(8, true, 0).unwrap_err(),
            GraphError::EnumerationTooLarge { n: 8 }
        );
    }

    #[test]
    fn mask_ranges_partition_the_stream() {
        let total = SmallGraphs::new(4, true, 0).unwrap().count();
        let half = SmallGraphs::mask_count(4) / 2;
        let a = SmallGraphs::new(4, true, 0).unwrap().mask_range(0, half).count();
        let b = SmallGraphs::new(4, true, 0)
            .unwrap()
            .mask_range(half, u64::MAX)
            .count();
        assert_eq!(a + b, total);
    }
}
