//! Brute-force oracles shared by the integration tests. Each one follows a
//! definition directly and shares no code with the library beyond `Graph`.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use metric_lines::Graph;

pub const INF: u32 = u32::MAX / 4;

/// All-pairs distances by Floyd–Warshall on the adjacency matrix.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
        for j in 0..n {
            if g.has_edge(i, j) {
                row[j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every shortest path of the graph, as a vertex sequence, found by
/// extending walks one edge at a time and keeping only those whose length
/// equals the distance between their ends.
pub fn all_geodesics(g: &Graph) -> Vec<Vec<usize>> {
    let d = floyd_warshall(g);
    let n = g.n();
    let mut out = Vec::new();
    for s in 0..n {
        let mut stack = vec![vec![s]];
        while let Some(path) = stack.pop() {
            let last = *path.last().unwrap();
            out.push(path.clone());
            for v in 0..n {
                if g.has_edge(last, v) && d[s][v] as usize == path.len() {
                    let mut next = path.clone();
                    next.push(v);
                    stack.push(next);
                }
            }
        }
    }
    out
}

/// The line of `{x, y}` straight from the definition: all `z` lying on a
/// common shortest path with `x` and `y`.
pub fn line_by_geodesics(geodesics: &[Vec<usize>], n: usize, x: usize, y: usize) -> BTreeSet<usize> {
    (0..n).filter(|&z| geodesics.iter().any(|p| p.contains(&x) && p.contains(&y) && p.contains(&z))).collect()
}

/// The set of distinct lines, by the geodesic oracle.
pub fn lines_by_geodesics(g: &Graph) -> BTreeSet<BTreeSet<usize>> {
    let geo = all_geodesics(g);
    let n = g.n();
    (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).map(|(x, y)| line_by_geodesics(&geo, n, x, y)).collect()
}

pub fn oracle_diameter(g: &Graph) -> Option<u32> {
    let d = floyd_warshall(g);
    let m = d.iter().flatten().copied().max().unwrap_or(0);
    (m < INF).then_some(m)
}

/// Every labeled graph on `n` vertices, one per edge subset.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Edge set as a sorted vector after relabeling.
fn relabeled(g: &Graph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = g
        .edges()
        .map(|(i, j)| {
            let (a, b) = (perm[i], perm[j]);
            (a.min(b), a.max(b))
        })
        .collect();
    e.sort_unstable();
    e
}

/// Lexicographically smallest relabeled edge list over all permutations:
/// an isomorphism invariant that is complete by construction.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms.iter().map(|p| relabeled(g, p)).min().unwrap()
}

/// Number of isomorphism classes of labeled graphs on `n` vertices that
/// satisfy `keep`, by exhaustive relabeling.
pub fn brute_class_count(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
    let perms = permutations(n);
    labeled_graphs(n).filter(|g| keep(g)).map(|g| brute_canonical(&g, &perms)).collect::<BTreeSet<_>>().len()
}

/// Brute-force isomorphism test.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && {
        let target = relabeled(h, &(0..h.n()).collect::<Vec<_>>());
        permutations(g.n()).iter().any(|p| relabeled(g, p) == target)
    }
}
