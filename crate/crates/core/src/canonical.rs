//! Canonical labeling of small graphs.
//!
//! The canonical code of a graph is the lexicographically smallest upper
//! triangle bit string (graph6 column order) over a set of vertex orderings
//! that depends only on the isomorphism class. The orderings come from a
//! search tree: the vertex partition is refined to an equitable one, the
//! first non-singleton cell is split by individualising each of its
//! vertices in turn, and the process recurses until the partition is
//! discrete. Vertices of a cell that are twins of an already explored vertex
//! are skipped, since the transposition is an automorphism that fixes the
//! branch prefix.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::{FamilyName, DIAMETER_THREE_EXTRAS, DIAMETER_TWO_FAMILY};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order accepted by the canonizer.
pub const MAX_CANON_N: usize = 12;

/// Canonical code of an isomorphism class.
///
/// Codes of different orders compare by order first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    fn pair_count(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2
    }

    /// The upper-triangle bit string packed big-endian into bytes.
    pub fn as_bytes(&self) -> Vec<u8> {
        let m = self.pair_count();
        let mut out = vec![0u8; m.div_ceil(8)];
        for k in 0..m {
            if self.bit(k) {
                out[k / 8] |= 0x80 >> (k % 8);
            }
        }
        out
    }

    #[inline]
    fn bit(&self, k: usize) -> bool {
        let m = self.pair_count();
        self.bits >> (m - 1 - k) & 1 == 1
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bit(k) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                k += 1;
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::encode(&self.to_graph())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_graph6())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

/// Result of a canonization: the code and the vertex order that realises it
/// (`order[pos]` is the original vertex placed at position `pos`).
#[derive(Clone, Debug)]
pub struct Canonical {
    pub code: CanonicalCode,
    pub order: Vec<usize>,
}

impl Canonical {
    /// Position of each original vertex in the canonical order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }
}

type Colors = [u8; MAX_CANON_N];

struct Search {
    n: usize,
    adj: [u64; MAX_CANON_N],
    best: Option<(u128, Colors)>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let mut adj = [0u64; MAX_CANON_N];
        for (v, row) in g.adjacency().iter().enumerate() {
            adj[v] = row.bits();
        }
        Search { n: g.n(), adj, best: None }
    }

    /// Refines `colors` (ranks `0..k`) to the coarsest equitable partition
    /// finer than it. Returns the number of cells.
    fn refine(&self, colors: &mut Colors, mut cells: usize) -> usize {
        let n = self.n;
        loop {
            let mut masks = [0u64; MAX_CANON_N];
            for v in 0..n {
                masks[colors[v] as usize] |= 1 << v;
            }
            let mut sigs = [0u64; MAX_CANON_N];
            for v in 0..n {
                let mut sig = (colors[v] as u64) << 48;
                for (c, &mask) in masks.iter().enumerate().take(cells) {
                    sig |= ((self.adj[v] & mask).count_ones() as u64) << (4 * (11 - c));
                }
                sigs[v] = sig;
            }
            let mut sorted = sigs;
            let sorted = &mut sorted[..n];
            sorted.sort_unstable();
            let mut uniq = 0;
            for i in 0..n {
                if i == 0 || sorted[i] != sorted[i - 1] {
                    sorted[uniq] = sorted[i];
                    uniq += 1;
                }
            }
            let uniq_sigs = &sorted[..uniq];
            for v in 0..n {
                colors[v] = uniq_sigs.binary_search(&sigs[v]).expect("present") as u8;
            }
            if uniq == cells {
                return cells;
            }
            cells = uniq;
        }
    }

    fn leaf_code(&self, colors: &Colors) -> u128 {
        let n = self.n;
        let mut order = [0usize; MAX_CANON_N];
        for v in 0..n {
            order[colors[v] as usize] = v;
        }
        let mut bits = 0u128;
        for j in 1..n {
            let row = self.adj[order[j]];
            for &u in &order[..j] {
                bits = bits << 1 | (row >> u & 1) as u128;
            }
        }
        bits
    }

    fn explore(&mut self, mut colors: Colors, cells: usize) {
        let n = self.n;
        let cells = self.refine(&mut colors, cells);
        if cells == n {
            let code = self.leaf_code(&colors);
            if self.best.is_none_or(|(b, _)| code < b) {
                self.best = Some((code, colors));
            }
            return;
        }
        let mut sizes = [0u8; MAX_CANON_N];
        for &c in &colors[..n] {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).expect("non-discrete partition") as u8;
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::with_capacity(members.len());
        for &v in &members {
            let twin = explored.iter().any(|&u| self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u));
            if twin {
                continue;
            }
            explored.push(v);
            let mut child = colors;
            for w in 0..n {
                let c = colors[w];
                child[w] = if c < target {
                    c
                } else if c == target {
                    if w == v {
                        target
                    } else {
                        target + 1
                    }
                } else {
                    c + 1
                };
            }
            self.explore(child, cells + 1);
        }
    }
}

fn check_canon_order(g: &Graph) -> Result<()> {
    if g.n() > MAX_CANON_N {
        return Err(Error::TooLarge { what: "canonical labeling", n: g.n(), max: MAX_CANON_N });
    }
    Ok(())
}

/// Canonizes `g`, optionally respecting an initial vertex colouring.
/// Colour classes are kept in ascending colour order in the result.
pub fn canonize_colored(g: &Graph, colors: Option<&[u8]>) -> Result<Canonical> {
    check_canon_order(g)?;
    let n = g.n();
    let mut init = [0u8; MAX_CANON_N];
    let mut cells = 1;
    if let Some(cs) = colors {
        if cs.len() != n {
            return Err(Error::BadParameter("colouring length differs from vertex count".into()));
        }
        let mut distinct: Vec<u8> = cs.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        for v in 0..n {
            init[v] = distinct.binary_search(&cs[v]).expect("present") as u8;
        }
        cells = distinct.len();
    }
    let mut search = Search::new(g);
    search.explore(init, cells);
    let (bits, leaf) = search.best.expect("search tree has a leaf");
    let mut order = vec![0; n];
    for v in 0..n {
        order[leaf[v] as usize] = v;
    }
    Ok(Canonical { code: CanonicalCode { n: n as u8, bits }, order })
}

pub fn canonize(g: &Graph) -> Result<Canonical> {
    canonize_colored(g, None)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    canonize(g).map(|c| c.code)
}

/// True if some automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Ok(true);
    }
    let mark = |w: usize| -> Vec<u8> { (0..g.n()).map(|i| (i != w) as u8).collect() };
    let cu = canonize_colored(g, Some(&mark(u)))?.code;
    let cv = canonize_colored(g, Some(&mark(v)))?.code;
    Ok(cu == cv)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_canon_order(g)?;
    check_canon_order(h)?;
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// The member of the ten-graph diameter-2 family isomorphic to `g`.
pub fn classify_family(g: &Graph) -> Result<Option<FamilyName>> {
    classify_among(g, &DIAMETER_TWO_FAMILY)
}

/// Like [`classify_family`] but also recognises the diameter-3 graphs.
pub fn classify_extended(g: &Graph) -> Result<Option<FamilyName>> {
    Ok(match classify_family(g)? {
        Some(t) => Some(t),
        None => classify_among(g, &DIAMETER_THREE_EXTRAS)?,
    })
}

fn classify_among(g: &Graph, tags: &[FamilyName]) -> Result<Option<FamilyName>> {
    check_canon_order(g)?;
    let code = canonical_form(g)?;
    for &tag in tags {
        if tag.order() != g.n() {
            continue;
        }
        if canonical_form(&tag.graph()?)? == code {
            return Ok(Some(tag));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilyName::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn c4_relabelings_agree() {
        let c4 = Graph::cycle(4).unwrap();
        let code = canonical_form(&c4).unwrap();
        for p in permutations(4) {
            assert_eq!(canonical_form(&c4.permute(&p).unwrap()).unwrap(), code);
        }
    }

    #[test]
    fn different_edge_counts_differ() {
        let a = canonical_form(&K23.graph().unwrap()).unwrap();
        let b = canonical_form(&K122.graph().unwrap()).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn house_alternative_labeling() {
        // The same house with the four-cycle on {x, a, b, c} instead: cycle
        // x a b c x plus roof vertex d on a and x.
        let other = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]).unwrap();
        assert_eq!(canonical_form(&other).unwrap(), canonical_form(&K122pp.graph().unwrap()).unwrap());
        assert!(are_isomorphic(&other, &K122pp.graph().unwrap()).unwrap());
    }

    #[test]
    fn canonical_order_realises_code() {
        let g = K122p.graph().unwrap();
        let c = canonize(&g).unwrap();
        let relabeled = g.permute(&c.positions()).unwrap();
        assert_eq!(relabeled, c.code.to_graph());
    }

    #[test]
    fn isomorphism_examples() {
        let m6 = M6.graph().unwrap();
        let k6p = K6p.graph().unwrap();
        assert!(!are_isomorphic(&m6, &k6p).unwrap());
        assert!(are_isomorphic(&Kprime2p(2).graph().unwrap(), &Graph::cycle(4).unwrap()).unwrap());
        assert!(!are_isomorphic(&K122p.graph().unwrap(), &K122pp.graph().unwrap()).unwrap());
    }

    #[test]
    fn too_large() {
        let g = Graph::path(13).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::TooLarge { .. })));
        assert!(canonical_form(&Graph::path(12).unwrap()).is_ok());
    }

    #[test]
    fn classification() {
        assert_eq!(classify_family(&M8.graph().unwrap()).unwrap(), Some(M8));
        assert_eq!(classify_family(&Graph::cycle(5).unwrap()).unwrap(), None);
        let k23 = K23.graph().unwrap().permute(&[4, 2, 0, 1, 3]).unwrap();
        assert_eq!(classify_family(&k23).unwrap(), Some(K23));
        assert_eq!(classify_family(&M8hat.graph().unwrap()).unwrap(), None);
        assert_eq!(classify_extended(&M8hat.graph().unwrap()).unwrap(), Some(M8hat));
    }

    #[test]
    fn orbits() {
        let p4 = Graph::path(4).unwrap();
        assert!(same_orbit(&p4, 0, 3).unwrap());
        assert!(same_orbit(&p4, 1, 2).unwrap());
        assert!(!same_orbit(&p4, 0, 1).unwrap());
        let petersen = Graph::petersen();
        assert!(same_orbit(&petersen, 0, 7).unwrap());
    }

    #[test]
    fn code_round_trip() {
        let g = Graph::petersen();
        let code = canonical_form(&g).unwrap();
        let back = code.to_graph();
        assert!(are_isomorphic(&g, &back).unwrap());
        assert_eq!(canonical_form(&back).unwrap(), code);
        assert_eq!(code.as_bytes().len(), 6);
    }
}
