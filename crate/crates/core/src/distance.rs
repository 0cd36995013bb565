//! All-pairs hop distances by bitset breadth-first search.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Shortest-path distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
    diameter: u32,
}

impl DistanceMatrix {
    /// Runs one BFS per vertex. Fails with [`Error::Disconnected`] if any
    /// pair is unreachable.
    pub fn new(g: &Graph) -> Result<DistanceMatrix> {
        let n = g.n();
        let mut d = vec![0u8; n * n];
        let mut diameter = 0;
        for s in 0..n {
            let mut seen = VertexSet::singleton(s);
            let mut frontier = seen;
            let mut level = 0u8;
            while !frontier.is_empty() {
                level += 1;
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= g.neighbors(v);
                }
                frontier = next - seen;
                seen |= frontier;
                for v in frontier {
                    d[s * n + v] = level;
                }
                if !frontier.is_empty() {
                    diameter = diameter.max(level as u32);
                }
            }
            if seen != g.vertices() {
                return Err(Error::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, d, diameter })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j] as u32
    }

    #[inline]
    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Vertices at distance exactly `k` from `x`.
    pub fn sphere(&self, x: usize, k: u32) -> VertexSet {
        (0..self.n).filter(|&v| self.get(x, v) == k).collect()
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.d[i * self.n..(i + 1) * self.n]
    }
}

/// Diameter of a connected graph.
pub fn diameter(g: &Graph) -> Result<u32> {
    DistanceMatrix::new(g).map(|d| d.diameter())
}

/// Diameter, or `None` if disconnected. Cheaper than building the matrix.
pub fn diameter_if_connected(g: &Graph) -> Option<u32> {
    let n = g.n();
    let all = g.vertices();
    let mut diameter = 0;
    for s in 0..n {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut ecc = 0;
        while seen != all {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= g.neighbors(v);
            }
            frontier = next - seen;
            if frontier.is_empty() {
                return None;
            }
            seen |= frontier;
            ecc += 1;
        }
        diameter = diameter.max(ecc);
    }
    Some(diameter)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_has_diameter_one() {
        assert_eq!(diameter(&Graph::complete(4).unwrap()).unwrap(), 1);
        assert_eq!(diameter(&Graph::complete(1).unwrap()).unwrap(), 0);
    }

    #[test]
    fn cycle_distances() {
        let c4 = Graph::cycle(4).unwrap();
        let d = DistanceMatrix::new(&c4).unwrap();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(1, 3), 2);
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.sphere(0, 2), VertexSet::from([2]));
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(diameter(&c7).unwrap(), 3);
        assert_eq!(diameter_if_connected(&c7), Some(3));
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(DistanceMatrix::new(&g), Err(Error::Disconnected)));
        assert!(matches!(diameter(&g), Err(Error::Disconnected)));
        assert_eq!(diameter_if_connected(&g), None);
    }
}
