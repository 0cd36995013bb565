//! Simple undirected graphs on at most 64 vertices.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// An immutable simple undirected graph.
///
/// Row `i` of the adjacency is the neighbourhood `N(i)`. Rows are kept
/// symmetric and irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Box<[VertexSet]>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { index: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj: adj.into() })
    }

    /// Builds a graph from neighbourhood rows, validating symmetry.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (i, row) in adj.iter().enumerate() {
            if let Some(bad) = (*row - all).first() {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
            if row.contains(i) {
                return Err(Error::SelfLoop(i));
            }
            for j in row.iter() {
                if !adj[j].contains(i) {
                    return Err(Error::BadParameter(format!("adjacency is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Graph { adj: adj.into() })
    }

    /// Rows are trusted to be symmetric and irreflexive.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { adj: adj.into() }
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let all = VertexSet::full(n);
        Ok(Graph::from_adjacency_unchecked((0..n).map(|i| all.without(i)).collect()))
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::BadParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("static edge list")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, row)| row.iter().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// `N²(x)`: the vertices other than `x` that are not adjacent to `x`.
    ///
    /// In a graph of diameter at most two these are exactly the vertices at
    /// distance two from `x`.
    #[inline]
    pub fn neighbors2(&self, x: usize) -> VertexSet {
        (self.adj[x] | VertexSet::singleton(x)).complement(self.n())
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next & (within - seen);
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_within(0, self.vertices()) == self.vertices()
    }

    /// True if deleting `v` disconnects the remaining vertices.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let rest = self.vertices().without(v);
        match rest.first() {
            None => false,
            Some(s) => self.component_within(s, rest) != rest,
        }
    }

    /// Relabels the graph: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n || perm.iter().collect::<std::collections::BTreeSet<_>>().len() != n {
            return Err(Error::BadParameter("not a permutation".into()));
        }
        if let Some(&bad) = perm.iter().find(|&&p| p >= n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, row) in self.adj.iter().enumerate() {
            adj[perm[u]] = row.iter().map(|v| perm[v]).collect();
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Returns a copy with the listed edges deleted. Each edge must exist.
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = self.adj.to_vec();
        for &(u, v) in edges {
            if u >= self.n() || v >= self.n() {
                return Err(Error::IndexOutOfRange { index: u.max(v), n: self.n() });
            }
            if !adj[u].contains(v) {
                return Err(Error::BadParameter(format!("edge ({u}, {v}) is absent")));
            }
            adj[u].remove(v);
            adj[v].remove(u);
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Appends a vertex `n` adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        let n = self.n();
        check_order(n + 1)?;
        if !neighbors.is_subset(self.vertices()) {
            let bad = (neighbors - self.vertices()).first().unwrap_or(n);
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        let mut adj = Vec::with_capacity(n + 1);
        adj.extend(self.adj.iter().enumerate().map(|(i, &row)| if neighbors.contains(i) { row.with(n) } else { row }));
        adj.push(neighbors);
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Deletes vertex `v`, shifting higher labels down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        let n = self.n();
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, n });
        }
        check_order(n - 1)?;
        let low = VertexSet::full(v).bits();
        let squeeze = |s: VertexSet| {
            let b = s.without(v).bits();
            VertexSet::from_bits((b & low) | ((b >> 1) & !low))
        };
        let adj = (0..n).filter(|&u| u != v).map(|u| squeeze(self.adj[u])).collect();
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Parses the edge-list text format: a header line `n m`, then `m`
    /// lines `i j` with 0-based endpoints. Blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::EdgeList("empty input".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line =
                lines.next().ok_or_else(|| Error::EdgeList(format!("expected {m} edges, found {}", edges.len())))?;
            edges.push(parse_pair(line)?);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::EdgeList(format!("unexpected trailing line {extra:?}")));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (i, j) in self.edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::EdgeList(format!("expected two integers in {line:?}")))?
            .parse()
            .map_err(|e| Error::EdgeList(format!("{line:?}: {e}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::EdgeList(format!("expected two integers in {line:?}")));
    }
    Ok((a, b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        f.write_str("])")
    }
}
