//! Executable checks of the structural facts behind the characterization,
//! run over every diameter-2 class of a given order.
//!
//! * `IndependentIntersection`: for an independent set `S` and `x, y ∈ S`,
//!   `line(x, y) ∩ S = {x, y}`.
//! * `DistanceTwoInjective`: `b ↦ line(x, b)` is injective on `N²(x)`.
//! * `IndependentModuleClasses`: each class of `u ~ v ⇔ line(x, u) =
//!   line(x, v)` on `N(x)` is an independent set and a module.
//! * `LineClassTrichotomy`: a line meets a class not containing its
//!   generators fully or not at all; classes of the generators themselves
//!   are covered (adjacent generators) or met exactly in the generators
//!   (non-adjacent ones).

use std::fmt;

use serde::Serialize;

use crate::enumerate::{EnumerationCursor, Enumerator};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::lines::{is_independent, is_module, pivot_decomposition_d2, Diameter2, PivotDecomposition};
use crate::parallel::Executor;
use crate::vertex_set::VertexSet;

pub const MAX_CLAIM_N: usize = 8;
pub const MAX_TRICHOTOMY_N: usize = 7;
/// Up to this order every maximal independent set is tested; above it, the
/// greedy maximal set grown from each start vertex.
pub const MAX_EXHAUSTIVE_MIS_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Claim {
    IndependentIntersection,
    DistanceTwoInjective,
    IndependentModuleClasses,
    LineClassTrichotomy,
}

pub const ALL_CLAIMS: [Claim; 4] = [
    Claim::IndependentIntersection,
    Claim::DistanceTwoInjective,
    Claim::IndependentModuleClasses,
    Claim::LineClassTrichotomy,
];

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::IndependentIntersection => "independent-intersection",
            Claim::DistanceTwoInjective => "distance-two-injective",
            Claim::IndependentModuleClasses => "independent-module-classes",
            Claim::LineClassTrichotomy => "line-class-trichotomy",
        })
    }
}

/// A failed check: the graph and a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SuiteStatus {
    Pass,
    Fail,
    /// Not run at this order.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub claim: Claim,
    pub status: SuiteStatus,
    /// Number of elementary assertions evaluated.
    pub checks: u64,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimSuiteReport {
    pub n: usize,
    pub graphs_checked: u64,
    pub suites: Vec<SuiteOutcome>,
}

impl ClaimSuiteReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.status != SuiteStatus::Fail)
    }
}

/// Per-claim tallies for one or more graphs.
#[derive(Clone, Debug, Default)]
struct Tally {
    checks: [u64; 4],
    first_failure: [Option<Counterexample>; 4],
}

impl Tally {
    fn record(&mut self, claim: Claim, ok: bool, g: &Graph, detail: impl FnOnce() -> String) {
        let i = claim as usize;
        self.checks[i] += 1;
        if !ok && self.first_failure[i].is_none() {
            self.first_failure[i] = Some(Counterexample { graph6: graph6::encode(g), detail: detail() });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for i in 0..4 {
            self.checks[i] += other.checks[i];
            if self.first_failure[i].is_none() {
                self.first_failure[i] = other.first_failure[i].clone();
            }
        }
        self
    }
}

/// All maximal independent sets, by brute force over subsets.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 20, "brute-force independent sets are limited to small graphs");
    (1u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&s| is_independent(g, s))
        .filter(|&s| (g.vertices() - s).iter().all(|v| !g.neighbors(v).is_disjoint(s)))
        .collect()
}

/// Greedy maximal independent sets, one grown from each start vertex by
/// scanning the remaining vertices in index order.
pub fn greedy_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut out: Vec<VertexSet> = (0..n)
        .map(|start| {
            let mut s = VertexSet::singleton(start);
            for v in (start + 1..n).chain(0..start) {
                if g.neighbors(v).is_disjoint(s) {
                    s.insert(v);
                }
            }
            s
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn check_graph(g: &Graph, trichotomy: bool) -> Tally {
    let mut t = Tally::default();
    let d2 = Diameter2::assume(g);
    let n = g.n();

    let sets = if n <= MAX_EXHAUSTIVE_MIS_N { maximal_independent_sets(g) } else { greedy_independent_sets(g) };
    for s in sets.into_iter().filter(|s| s.len() >= 2) {
        for x in s {
            for y in s.iter().filter(|&y| y > x) {
                let line = d2.line(x, y);
                t.record(Claim::IndependentIntersection, line & s == VertexSet::from([x, y]), g, || {
                    format!("S = {s}, line({x},{y}) = {line}")
                });
            }
        }
    }

    let pivots: Vec<PivotDecomposition> = (0..n).map(|x| pivot_decomposition_d2(d2, x)).collect();
    for p in &pivots {
        let d2x = g.neighbors2(p.x).len();
        t.record(Claim::DistanceTwoInjective, p.l2.len() == d2x, g, || {
            format!("x = {}: {} distinct lines for d2(x) = {d2x}", p.x, p.l2.len())
        });
        for &class in &p.classes {
            let ok = is_independent(g, class) && is_module(g, class);
            t.record(Claim::IndependentModuleClasses, ok, g, || {
                format!("x = {}: class {class} is not an independent module", p.x)
            });
        }
    }

    if trichotomy {
        for v in 0..n {
            for w in v + 1..n {
                let line = d2.line(v, w);
                let ends = VertexSet::from([v, w]);
                for p in &pivots {
                    trichotomy_at(&mut t, g, p, v, w, line, ends);
                }
            }
        }
    }
    t
}

fn trichotomy_at(
    t: &mut Tally,
    g: &Graph,
    p: &PivotDecomposition,
    v: usize,
    w: usize,
    line: VertexSet,
    ends: VertexSet,
) {
    for &class in p.classes.iter().filter(|c| c.is_disjoint(ends)) {
        let meet = class & line;
        t.record(Claim::LineClassTrichotomy, meet.is_empty() || meet == class, g, || {
            format!("x = {}, line({v},{w}) = {line} splits class {class}", p.x)
        });
    }
    let nx = g.neighbors(p.x);
    if nx.contains(v) && nx.contains(w) {
        let both = p.class_of(v).unwrap_or_default() | p.class_of(w).unwrap_or_default();
        let ok = if g.has_edge(v, w) { both.is_subset(line) } else { both & line == ends };
        t.record(Claim::LineClassTrichotomy, ok, g, || {
            format!("x = {}, line({v},{w}) = {line} vs classes {both}", p.x)
        });
    }
}

/// Runs the four suites on one diameter-2 graph. The trichotomy suite only
/// runs when `trichotomy` is set.
pub fn check_claims_on(g: &Graph, trichotomy: bool) -> Result<Vec<SuiteOutcome>> {
    Diameter2::new(g)?;
    Ok(outcomes(check_graph(g, trichotomy), trichotomy))
}

fn outcomes(t: Tally, trichotomy: bool) -> Vec<SuiteOutcome> {
    ALL_CLAIMS
        .iter()
        .map(|&claim| {
            let i = claim as usize;
            let status = if claim == Claim::LineClassTrichotomy && !trichotomy {
                SuiteStatus::Skipped
            } else if t.first_failure[i].is_some() {
                SuiteStatus::Fail
            } else {
                SuiteStatus::Pass
            };
            SuiteOutcome { claim, status, checks: t.checks[i], counterexample: t.first_failure[i].clone() }
        })
        .collect()
}

/// Runs every suite over all connected diameter-2 classes on `n` vertices.
pub fn run_claim_suite(n: usize, exec: &Executor) -> Result<ClaimSuiteReport> {
    if n > MAX_CLAIM_N {
        return Err(Error::TooLarge { what: "claim suites", n, max: MAX_CLAIM_N });
    }
    let trichotomy = n <= MAX_TRICHOTOMY_N;
    let cursor = EnumerationCursor::connected(n).with_diameter(2);
    let (stats, tally) = Enumerator::new(exec.clone()).fold(
        &cursor,
        Tally::default,
        |acc, g| acc.merge(check_graph(g, trichotomy)),
        Tally::merge,
    )?;
    Ok(ClaimSuiteReport { n, graphs_checked: stats.visited, suites: outcomes(tally, trichotomy) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilyName::*;

    #[test]
    fn independent_sets_of_c4() {
        let c4 = Graph::cycle(4).unwrap();
        let sets = maximal_independent_sets(&c4);
        assert_eq!(sets, vec![VertexSet::from([0, 2]), VertexSet::from([1, 3])]);
        assert_eq!(greedy_independent_sets(&c4), sets);
    }

    #[test]
    fn family_members_pass() {
        for tag in [K23, K122, K122p, K122pp, M6, K6p] {
            let out = check_claims_on(&tag.graph().unwrap(), true).unwrap();
            for s in out {
                assert_eq!(s.status, SuiteStatus::Pass, "{tag} {:?}", s);
                assert!(s.checks > 0);
            }
        }
    }

    #[test]
    fn literal_trichotomy_fails_when_the_class_holds_a_generator() {
        // K23 with pivot a = 0: N(a) = {x, b, d} = {2, 3, 4} is a single
        // class. The line through the non-adjacent x, b meets it in {x, b}
        // only, so the statement must exclude classes containing a
        // generator, which the suite does.
        let g = K23.graph().unwrap();
        let d2 = Diameter2::new(&g).unwrap();
        let p = pivot_decomposition_d2(d2, 0);
        assert_eq!(p.classes, vec![VertexSet::from([2, 3, 4])]);
        let line = d2.line(2, 3);
        let class = p.class_of(4).unwrap();
        let meet = class & line;
        assert!(!meet.is_empty() && meet != class);
        let mut t = Tally::default();
        trichotomy_at(&mut t, &g, &p, 2, 3, line, VertexSet::from([2, 3]));
        assert!(t.first_failure.iter().all(Option::is_none));
    }

    #[test]
    fn small_orders() {
        let exec = Executor::default();
        let r3 = run_claim_suite(3, &exec).unwrap();
        assert_eq!(r3.graphs_checked, 1);
        assert!(r3.passed());
        let r5 = run_claim_suite(5, &exec).unwrap();
        assert!(r5.passed());
        assert!(r5.suites.iter().all(|s| s.status == SuiteStatus::Pass && s.counterexample.is_none()));
        assert!(matches!(run_claim_suite(9, &exec), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn detects_a_planted_failure() {
        // A set with an edge is not independent; the intersection check
        // must flag the adjacent pair's line when fed such a set.
        let g = K122pp.graph().unwrap();
        let d2 = Diameter2::new(&g).unwrap();
        let s = VertexSet::from([1, 3, 4]);
        let line = d2.line(1, 4);
        assert_ne!(line & s, VertexSet::from([1, 4]));
    }
}
