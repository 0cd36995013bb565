//! Named graphs: the ten diameter-2 graphs with fewer lines than vertices,
//! three diameter-3 relatives, and the parameterised families behind them.
//!
//! Labelings are fixed; see `docs/labelings.md`. Five-vertex graphs use the
//! letters `x a b c d`, mapped to `0 1 2 3 4` except for `K23`, whose parts
//! are listed first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyName {
    /// Path on three vertices.
    K12,
    /// Four-cycle.
    K22,
    K23,
    K122,
    /// `K122` minus one edge at the degree-4 vertex.
    K122p,
    /// The house.
    K122pp,
    M6,
    K6p,
    M8,
    K8p,
    /// `M6` minus one matching edge (diameter 3).
    M6minus,
    /// `M8` minus one matching edge (diameter 3).
    M8minus,
    /// `M8` with one clique reduced to a perfect matching (diameter 3).
    M8hat,
    /// Complete graph on `p` vertices.
    Kp(usize),
    /// Two `p`-cliques joined by a perfect matching.
    M2p(usize),
    /// Complete multipartite graph with `p` parts of size two.
    Kprime2p(usize),
}

use FamilyName::*;

/// The diameter-2 family, in its customary listing order.
pub const DIAMETER_TWO_FAMILY: [FamilyName; 10] = [K12, K22, K23, K122, K122p, K122pp, M6, K6p, M8, K8p];

/// The three diameter-3 graphs with fewer lines than vertices.
pub const DIAMETER_THREE_EXTRAS: [FamilyName; 3] = [M6minus, M8minus, M8hat];

/// All thirteen fixed tags.
pub const ALL_FIXED: [FamilyName; 13] = [K12, K22, K23, K122, K122p, K122pp, M6, K6p, M8, K8p, M6minus, M8minus, M8hat];

const X: usize = 0;
const A: usize = 1;
const B: usize = 2;
const C: usize = 3;
const D: usize = 4;

impl FamilyName {
    pub fn graph(self) -> Result<Graph> {
        match self {
            K12 => Graph::from_edges(3, &[(0, 1), (1, 2)]),
            K22 => Graph::cycle(4),
            // parts {a, c} = {0, 1} and {x, b, d} = {2, 3, 4}
            K23 => Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
            // parts {x, b}, {a, c}, {d}
            K122 => Graph::from_edges(5, &[(X, A), (X, C), (X, D), (B, A), (B, C), (B, D), (A, D), (C, D)]),
            K122p => K122.graph()?.without_edges(&[(X, D)]),
            // five-cycle x a b d c with chord a c
            K122pp => Graph::from_edges(5, &[(X, A), (A, B), (B, D), (D, C), (C, X), (A, C)]),
            M6 => M2p(3).graph(),
            K6p => Kprime2p(3).graph(),
            M8 => M2p(4).graph(),
            K8p => Kprime2p(4).graph(),
            M6minus => M2p(3).graph()?.without_edges(&[(0, 3)]),
            M8minus => M2p(4).graph()?.without_edges(&[(0, 4)]),
            // The first clique keeps only the matching {01, 23}; removing just that
            // matching would leave a diameter-2 graph with 19 lines.
            M8hat => M2p(4).graph()?.without_edges(&[(0, 2), (0, 3), (1, 2), (1, 3)]),
            Kp(p) => {
                if p < 1 {
                    return Err(Error::BadParameter("Kp needs p >= 1".into()));
                }
                Graph::complete(p)
            }
            M2p(p) => {
                if p < 2 {
                    return Err(Error::BadParameter("M2p needs p >= 2".into()));
                }
                check_half(p)?;
                let mut edges = Vec::with_capacity(p * p);
                for i in 0..p {
                    for j in i + 1..p {
                        edges.push((i, j));
                        edges.push((i + p, j + p));
                    }
                    edges.push((i, i + p));
                }
                Graph::from_edges(2 * p, &edges)
            }
            Kprime2p(p) => {
                if p < 2 {
                    return Err(Error::BadParameter("Kprime2p needs p >= 2".into()));
                }
                check_half(p)?;
                let n = 2 * p;
                let edges: Vec<_> =
                    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| i / 2 != j / 2).collect();
                Graph::from_edges(n, &edges)
            }
        }
    }

    /// Number of vertices of the constructed graph.
    pub fn order(self) -> usize {
        match self {
            K12 => 3,
            K22 => 4,
            K23 | K122 | K122p | K122pp => 5,
            M6 | K6p | M6minus => 6,
            M8 | K8p | M8minus | M8hat => 8,
            Kp(p) => p,
            M2p(p) | Kprime2p(p) => 2 * p,
        }
    }

    /// Conventional mathematical name.
    pub fn pretty(self) -> String {
        match self {
            K12 => "K_{1,2}".into(),
            K22 => "K_{2,2}".into(),
            K23 => "K_{2,3}".into(),
            K122 => "K_{1,2,2}".into(),
            K122p => "K_{1,2,2}'".into(),
            K122pp => "K_{1,2,2}'' (house)".into(),
            M6 => "M_6".into(),
            K6p => "K_6'".into(),
            M8 => "M_8".into(),
            K8p => "K_8'".into(),
            M6minus => "M_6'".into(),
            M8minus => "M_8'".into(),
            M8hat => "M^_8".into(),
            Kp(p) => format!("K_{p}"),
            M2p(p) => format!("M_{}", 2 * p),
            Kprime2p(p) => format!("K_{}'", 2 * p),
        }
    }
}

fn check_half(p: usize) -> Result<()> {
    if 2 * p > crate::vertex_set::MAX_VERTICES {
        return Err(Error::TooManyVertices(2 * p));
    }
    Ok(())
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kp(p) => write!(f, "Kp({p})"),
            M2p(p) => write!(f, "M2p({p})"),
            Kprime2p(p) => write!(f, "Kprime2p({p})"),
            other => fmt::Debug::fmt(other, f),
        }
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    /// Accepts the tags printed by `Display`, e.g. `K23`, `M8hat`, `M2p(3)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(tag) = ALL_FIXED.iter().find(|t| t.to_string() == s) {
            return Ok(*tag);
        }
        let unknown = || Error::UnknownFamily(s.to_string());
        let (head, rest) = s.split_once('(').ok_or_else(unknown)?;
        let p: usize = rest.strip_suffix(')').and_then(|v| v.trim().parse().ok()).ok_or_else(unknown)?;
        match head {
            "Kp" => Ok(Kp(p)),
            "M2p" => Ok(M2p(p)),
            "Kprime2p" => Ok(Kprime2p(p)),
            _ => Err(unknown()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::VertexSet;

    #[test]
    fn k23_parts() {
        let g = K23.graph().unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.neighbors(0), VertexSet::from([2, 3, 4]));
        assert_eq!(g.neighbors(3), VertexSet::from([0, 1]));
    }

    #[test]
    fn m6_edge_count() {
        let g = M2p(3).graph().unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 9);
        assert!(g.has_edge(0, 3) && g.has_edge(1, 4) && g.has_edge(2, 5));
        assert!(!g.has_edge(0, 4));
    }

    #[test]
    fn house_edges() {
        let g = K122pp.graph().unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn derived_edge_counts() {
        let counts: Vec<_> = ALL_FIXED.iter().map(|t| t.graph().unwrap().edge_count()).collect();
        assert_eq!(counts, vec![2, 4, 6, 8, 7, 6, 9, 12, 16, 24, 8, 15, 12]);
        for t in ALL_FIXED {
            assert_eq!(t.graph().unwrap().n(), t.order());
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(Kp(0).graph(), Err(Error::BadParameter(_))));
        assert!(matches!(M2p(1).graph(), Err(Error::BadParameter(_))));
        assert!(matches!(Kprime2p(1).graph(), Err(Error::BadParameter(_))));
        assert!(Kp(1).graph().is_ok());
        assert!(M2p(33).graph().is_err());
    }

    #[test]
    fn tag_parsing() {
        for t in ALL_FIXED {
            assert_eq!(t.to_string().parse::<FamilyName>().unwrap(), t);
        }
        assert_eq!("M2p(5)".parse::<FamilyName>().unwrap(), M2p(5));
        assert_eq!("Kp(4)".parse::<FamilyName>().unwrap(), Kp(4));
        assert!("NOPE".parse::<FamilyName>().is_err());
        assert!("Kp(x)".parse::<FamilyName>().is_err());
    }
}
