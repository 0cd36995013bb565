//! Isomorph-free generation of small graphs by canonical augmentation.
//!
//! Graphs on `n` vertices are grown from the representatives on `n - 1`
//! vertices by adding a vertex `v` with every possible neighbourhood. A
//! child is accepted only if `v` lies in the orbit of its canonical deletion
//! vertex: among the non-cut vertices of maximum degree (all vertices of
//! maximum degree when disconnected graphs are wanted), the one placed last
//! by the canonical labeling. Deleting it gives a connected parent, so every
//! class is reached from exactly one parent; isomorphic siblings are then
//! removed by comparing canonical codes.

use std::collections::BTreeSet;

use crate::canonical::{canonize, canonize_colored, CanonicalCode};
use crate::distance::diameter_if_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parallel::Executor;
use crate::vertex_set::VertexSet;

/// Largest order [`Enumerator`] will generate.
pub const MAX_ENUM_N: usize = 10;
/// Largest order for the labeled-graph sweep.
pub const MAX_NAIVE_N: usize = 7;

/// Parameters of an enumeration run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCursor {
    pub n: usize,
    pub connected_only: bool,
    /// Visit only graphs with exactly this diameter.
    pub diameter: Option<u32>,
}

impl EnumerationCursor {
    pub fn connected(n: usize) -> Self {
        EnumerationCursor { n, connected_only: true, diameter: None }
    }

    pub fn with_diameter(mut self, d: u32) -> Self {
        self.diameter = Some(d);
        self
    }

    fn check(&self) -> Result<()> {
        if self.n > MAX_ENUM_N {
            return Err(Error::TooLarge { what: "enumeration", n: self.n, max: MAX_ENUM_N });
        }
        if self.n == 0 {
            return Err(Error::TooManyVertices(0));
        }
        if self.diameter.is_some() && !self.connected_only {
            return Err(Error::BadParameter("a diameter filter requires connected graphs".into()));
        }
        Ok(())
    }

    fn passes(&self, g: &Graph) -> bool {
        match self.diameter {
            None => true,
            Some(d) => diameter_if_connected(g) == Some(d),
        }
    }
}

/// Counts from one enumeration run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Isomorphism classes generated before the diameter filter.
    pub generated: u64,
    /// Classes that passed the filter.
    pub visited: u64,
}

/// Accepted, pairwise non-isomorphic children of `parent`, as canonically
/// labelled graphs sorted by code.
pub fn children(parent: &Graph, connected_only: bool) -> Result<Vec<(CanonicalCode, Graph)>> {
    let n = parent.n();
    let mut out = Vec::new();
    let first = if connected_only { 1 } else { 0 };
    for mask in first..1u64 << n {
        let s = VertexSet::from_bits(mask);
        let child = parent.with_vertex(s)?;
        if let Some(code) = accept(&child, connected_only)? {
            out.push(code);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out.into_iter().map(|c| (c, c.to_graph())).collect())
}

/// Canonical code of `g` if its last vertex is a canonical deletion vertex.
fn accept(g: &Graph, connected_only: bool) -> Result<Option<CanonicalCode>> {
    let n = g.n();
    let v = n - 1;
    let dv = g.degree(v);
    // With a connected parent the new vertex is never a cut vertex, so it
    // only has to match the top degree among eligible vertices.
    let eligible = |u: usize| !connected_only || !g.is_cut_vertex(u);
    if (0..v).any(|u| g.degree(u) > dv && eligible(u)) {
        return Ok(None);
    }
    let candidates: Vec<usize> = (0..n).filter(|&u| g.degree(u) == dv && eligible(u)).collect();
    let canon = canonize(g)?;
    if candidates.len() == 1 {
        return Ok(Some(canon.code));
    }
    let pos = canon.positions();
    let w = *candidates.iter().max_by_key(|&&u| pos[u]).expect("v is a candidate");
    if w == v || same_orbit_marked(g, v, w)? {
        Ok(Some(canon.code))
    } else {
        Ok(None)
    }
}

fn same_orbit_marked(g: &Graph, u: usize, w: usize) -> Result<bool> {
    let mark = |x: usize| -> Vec<u8> { (0..g.n()).map(|i| (i != x) as u8).collect() };
    Ok(canonize_colored(g, Some(&mark(u)))?.code == canonize_colored(g, Some(&mark(w)))?.code)
}

/// Enumeration driver bound to an executor.
#[derive(Clone, Debug, Default)]
pub struct Enumerator {
    exec: Executor,
}

const PARENT_CHUNK: usize = 512;

impl Enumerator {
    pub fn new(exec: Executor) -> Self {
        Enumerator { exec }
    }

    pub fn executor(&self) -> &Executor {
        &self.exec
    }

    /// All classes on `n` vertices, canonically labelled, sorted by code.
    pub fn level(&self, n: usize, connected_only: bool) -> Result<Vec<Graph>> {
        EnumerationCursor { n, connected_only, diameter: None }.check()?;
        let mut current = vec![Graph::from_edges(1, &[])?];
        for _ in 1..n {
            let batches = self.exec.map(&current, |p| children(p, connected_only));
            let mut next = Vec::new();
            for batch in batches {
                next.extend(batch?);
            }
            next.sort_unstable_by_key(|c| c.0);
            current = next.into_iter().map(|(_, g)| g).collect();
        }
        Ok(current)
    }

    fn parents(&self, cursor: &EnumerationCursor) -> Result<Vec<Graph>> {
        self.level(cursor.n - 1, cursor.connected_only)
    }

    /// Calls `visit` once per class passing the cursor's filter, in
    /// deterministic order: by parent, then by code within a parent.
    pub fn for_each<F: FnMut(&Graph)>(&self, cursor: &EnumerationCursor, mut visit: F) -> Result<EnumerationStats> {
        cursor.check()?;
        let mut stats = EnumerationStats::default();
        if cursor.n == 1 {
            let g = Graph::from_edges(1, &[])?;
            stats.generated = 1;
            if cursor.passes(&g) {
                stats.visited = 1;
                visit(&g);
            }
            return Ok(stats);
        }
        let parents = self.parents(cursor)?;
        for chunk in parents.chunks(PARENT_CHUNK) {
            let batches = self.exec.map(chunk, |p| {
                children(p, cursor.connected_only).map(|cs| {
                    let total = cs.len() as u64;
                    let kept: Vec<Graph> = cs.into_iter().map(|(_, g)| g).filter(|g| cursor.passes(g)).collect();
                    (total, kept)
                })
            });
            for batch in batches {
                let (total, kept) = batch?;
                stats.generated += total;
                stats.visited += kept.len() as u64;
                kept.iter().for_each(&mut visit);
            }
        }
        Ok(stats)
    }

    /// Applies `f` in parallel to every class passing the filter and keeps
    /// the `Some` results in visit order.
    pub fn collect<R, F>(&self, cursor: &EnumerationCursor, f: F) -> Result<(EnumerationStats, Vec<R>)>
    where
        R: Send,
        F: Fn(&Graph) -> Option<R> + Sync + Send,
    {
        self.fold(
            cursor,
            Vec::new,
            |mut acc, g| {
                acc.extend(f(g));
                acc
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        )
    }

    /// Folds every class passing the filter. Each parent's children are
    /// folded from `init()` in parallel; the partial results are merged with
    /// `merge` in parent order, so the outcome is independent of the worker
    /// count.
    pub fn fold<A, I, F, M>(
        &self,
        cursor: &EnumerationCursor,
        init: I,
        fold: F,
        merge: M,
    ) -> Result<(EnumerationStats, A)>
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, &Graph) -> A + Sync + Send,
        M: Fn(A, A) -> A,
    {
        cursor.check()?;
        if cursor.n == 1 {
            let mut acc = Some(init());
            let stats = self.for_each(cursor, |g| acc = acc.take().map(|a| fold(a, g)))?;
            return Ok((stats, acc.expect("accumulator")));
        }
        let parents = self.parents(cursor)?;
        let partials = self.exec.map(&parents, |p| -> Result<(u64, u64, A)> {
            let cs = children(p, cursor.connected_only)?;
            let total = cs.len() as u64;
            let mut visited = 0;
            let mut acc = init();
            for (_, g) in &cs {
                if cursor.passes(g) {
                    visited += 1;
                    acc = fold(acc, g);
                }
            }
            Ok((total, visited, acc))
        });
        let mut stats = EnumerationStats::default();
        let mut acc = init();
        for part in partials {
            let (total, visited, a) = part?;
            stats.generated += total;
            stats.visited += visited;
            acc = merge(acc, a);
        }
        Ok((stats, acc))
    }

    /// All connected classes on `n` vertices by sweeping every labeled graph
    /// and deduplicating canonical codes. Independent of augmentation.
    pub fn naive(&self, n: usize) -> Result<Vec<Graph>> {
        if n > MAX_NAIVE_N {
            return Err(Error::TooLarge { what: "naive enumeration", n, max: MAX_NAIVE_N });
        }
        if n == 0 {
            return Err(Error::TooManyVertices(0));
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let total = 1u64 << pairs.len();
        let chunk_bits = pairs.len().saturating_sub(10);
        let chunks = total >> chunk_bits;
        let parts = self.exec.map_range(0..chunks, |c| -> Result<BTreeSet<CanonicalCode>> {
            let mut seen = BTreeSet::new();
            for mask in c << chunk_bits..(c + 1) << chunk_bits {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::from_edges(n, &edges)?;
                if g.is_connected() {
                    seen.insert(canonize(&g)?.code);
                }
            }
            Ok(seen)
        });
        let mut all = BTreeSet::new();
        for p in parts {
            all.extend(p?);
        }
        Ok(all.into_iter().map(|c| c.to_graph()).collect())
    }
}

/// Sequential convenience wrapper around [`Enumerator::for_each`]; returns
/// the number of visited classes.
pub fn enumerate_connected<F: FnMut(&Graph)>(cursor: &EnumerationCursor, visit: F) -> Result<u64> {
    if !cursor.connected_only {
        return Err(Error::BadParameter("enumerate_connected needs connected_only".into()));
    }
    Enumerator::default().for_each(cursor, visit).map(|s| s.visited)
}

/// Sequential convenience wrapper around [`Enumerator::naive`].
pub fn enumerate_naive(n: usize) -> Result<Vec<Graph>> {
    Enumerator::default().naive(n)
}
