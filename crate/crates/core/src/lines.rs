//! Lines of a graph metric.
//!
//! The line through distinct vertices `x, y` is the set of vertices `z` lying
//! on a common shortest path with `x` and `y`; in a graph metric that is the
//! set of `z` collinear with `x, y` in one of the three betweenness orders.
//! When the diameter is at most two the line has a closed form in terms of
//! neighbourhoods, see [`Diameter2::line`].

use std::collections::BTreeMap;

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The line through `x` and `y`, from the betweenness definition.
pub fn line_general(d: &DistanceMatrix, x: usize, y: usize) -> Result<VertexSet> {
    let n = d.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, n });
        }
    }
    if x == y {
        return Err(Error::EqualVertices(x));
    }
    Ok(line_general_unchecked(d, x, y))
}

fn line_general_unchecked(d: &DistanceMatrix, x: usize, y: usize) -> VertexSet {
    let dxy = d.get(x, y);
    let (rx, ry) = (d.row(x), d.row(y));
    let mut line = VertexSet::EMPTY;
    for z in 0..d.n() {
        let (dxz, dyz) = (rx[z] as u32, ry[z] as u32);
        if dxz + dyz == dxy || dxy + dyz == dxz || dxy + dxz == dyz {
            line.insert(z);
        }
    }
    line
}

/// A graph known to have diameter at most two.
#[derive(Clone, Copy, Debug)]
pub struct Diameter2<'g> {
    g: &'g Graph,
}

impl<'g> Diameter2<'g> {
    /// Checks the diameter. Diameter one (complete graphs) is accepted since
    /// the adjacent-pair formula covers it.
    pub fn new(g: &'g Graph) -> Result<Self> {
        match crate::distance::diameter_if_connected(g) {
            None => Err(Error::Disconnected),
            Some(d) if d <= 2 => Ok(Diameter2 { g }),
            Some(found) => Err(Error::WrongDiameter { expected: 2, found }),
        }
    }

    pub(crate) fn assume(g: &'g Graph) -> Self {
        Diameter2 { g }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Closed-form line. Non-adjacent `x, y` give `{x, y} ∪ (N(x) ∩ N(y))`;
    /// adjacent ones give `{x, y}` plus the symmetric difference of the two
    /// neighbourhoods.
    #[inline]
    pub fn line(&self, x: usize, y: usize) -> VertexSet {
        let (nx, ny) = (self.g.neighbors(x), self.g.neighbors(y));
        let ends = VertexSet::from_bits(1 << x | 1 << y);
        if nx.contains(y) {
            ends | VertexSet::from_bits(nx.bits() ^ ny.bits())
        } else {
            ends | (nx & ny)
        }
    }
}

/// Closed-form line for a diameter-2 graph. Checks the diameter on every
/// call; hold a [`Diameter2`] to amortise that.
pub fn line_diam2(g: &Graph, x: usize, y: usize) -> Result<VertexSet> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, n });
        }
    }
    if x == y {
        return Err(Error::EqualVertices(x));
    }
    match crate::distance::diameter_if_connected(g) {
        Some(2) => Ok(Diameter2::assume(g).line(x, y)),
        None => Err(Error::Disconnected),
        Some(found) => Err(Error::WrongDiameter { expected: 2, found }),
    }
}

/// Deduplicated set of lines in ascending bit-pattern order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct LineSet {
    lines: Vec<VertexSet>,
}

impl LineSet {
    pub fn from_lines<I: IntoIterator<Item = VertexSet>>(lines: I) -> Self {
        let mut lines: Vec<_> = lines.into_iter().collect();
        lines.sort_unstable();
        lines.dedup();
        LineSet { lines }
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn contains(&self, line: VertexSet) -> bool {
        self.lines.binary_search(&line).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.lines.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.lines
    }

    /// Each line as a sorted list of vertex indices.
    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.lines.iter().map(|l| l.to_vec()).collect()
    }
}

/// All lines of a connected graph.
pub fn line_set(g: &Graph) -> Result<LineSet> {
    let d = DistanceMatrix::new(g)?;
    Ok(line_set_with(g, &d))
}

/// All lines, reusing a distance matrix.
pub fn line_set_with(g: &Graph, d: &DistanceMatrix) -> LineSet {
    let n = g.n();
    let mut lines = Vec::with_capacity(n * (n - 1) / 2);
    if d.diameter() <= 2 {
        let d2 = Diameter2::assume(g);
        for x in 0..n {
            for y in x + 1..n {
                lines.push(d2.line(x, y));
            }
        }
    } else {
        for x in 0..n {
            for y in x + 1..n {
                lines.push(line_general_unchecked(d, x, y));
            }
        }
    }
    LineSet::from_lines(lines)
}

pub fn count_lines(g: &Graph) -> Result<usize> {
    line_set(g).map(|l| l.len())
}

pub fn has_universal_line(g: &Graph) -> Result<bool> {
    let lines = line_set(g)?;
    Ok(lines.contains(g.vertices()))
}

/// Lines through a fixed vertex `x`, split by the distance of the second
/// generator, together with the partition of `N(x)` by equal lines.
#[derive(Clone, Debug)]
pub struct PivotDecomposition {
    pub x: usize,
    /// `{line(x, a) : a ∈ N(x)}`.
    pub l1: LineSet,
    /// How many neighbours `a` generate each line of `l1`.
    pub l1_multiplicity: BTreeMap<VertexSet, usize>,
    /// `{line(x, b) : b ∈ N²(x)}`.
    pub l2: LineSet,
    /// Classes of `N(x)` under `u ~ v ⇔ line(x, u) = line(x, v)`, ordered by
    /// smallest member.
    pub classes: Vec<VertexSet>,
}

impl PivotDecomposition {
    /// The class containing `u`, if `u ∈ N(x)`.
    pub fn class_of(&self, u: usize) -> Option<VertexSet> {
        self.classes.iter().copied().find(|c| c.contains(u))
    }
}

/// Requires diameter at most two.
pub fn pivot_decomposition(g: &Graph, x: usize) -> Result<PivotDecomposition> {
    if x >= g.n() {
        return Err(Error::IndexOutOfRange { index: x, n: g.n() });
    }
    Diameter2::new(g).map(|d2| pivot_decomposition_d2(d2, x))
}

pub(crate) fn pivot_decomposition_d2(d2: Diameter2<'_>, x: usize) -> PivotDecomposition {
    let g = d2.graph();
    let mut by_line: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    for a in g.neighbors(x) {
        by_line.entry(d2.line(x, a)).or_default().insert(a);
    }
    let l1_multiplicity = by_line.iter().map(|(l, members)| (*l, members.len())).collect();
    let l1 = LineSet::from_lines(by_line.keys().copied());
    let mut classes: Vec<_> = by_line.into_values().collect();
    classes.sort_unstable_by_key(|c| c.first());
    let l2 = LineSet::from_lines(g.neighbors2(x).iter().map(|b| d2.line(x, b)));
    PivotDecomposition { x, l1, l1_multiplicity, l2, classes }
}

/// No edge has both ends in `s`.
pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}

/// Every vertex outside `s` sees all of `s` or none of it.
pub fn is_module(g: &Graph, s: VertexSet) -> bool {
    if s.is_empty() {
        return true;
    }
    (g.vertices() - s).iter().all(|z| {
        let seen = g.neighbors(z) & s;
        seen.is_empty() || seen == s
    })
}
