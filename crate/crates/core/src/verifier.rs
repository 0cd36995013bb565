//! Exhaustive checks of the diameter-2 characterization.
//!
//! For every isomorphism class of connected graphs of a given order and
//! diameter, the lines are counted. Graphs with fewer lines than vertices
//! ("exceptions") are classified against the named families; a diameter-2
//! exception outside the ten-graph family is a theorem violation and is
//! reported with its full line set rather than aborting the run.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::canonical::{canonical_form, classify_extended, classify_family, CanonicalCode};
use crate::distance::DistanceMatrix;
use crate::enumerate::{EnumerationCursor, Enumerator, MAX_ENUM_N};
use crate::error::{Error, Result};
use crate::family::FamilyName;
use crate::graph::Graph;
use crate::graph6;
use crate::lines::line_set_with;

/// Whether a graph satisfies the Chen–Chvátal alternative: at least `n`
/// lines, or a line through every vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChenChvatalStatus {
    pub n: usize,
    pub line_count: usize,
    pub universal: bool,
    pub satisfied: bool,
}

pub fn check_chen_chvatal(g: &Graph) -> Result<ChenChvatalStatus> {
    let d = DistanceMatrix::new(g)?;
    let lines = line_set_with(g, &d);
    let universal = lines.contains(g.vertices());
    Ok(ChenChvatalStatus { n: g.n(), line_count: lines.len(), universal, satisfied: lines.len() >= g.n() || universal })
}

/// A graph with fewer lines than vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionRecord {
    #[serde(skip)]
    pub code: CanonicalCode,
    pub n: usize,
    pub graph6: String,
    pub edges: usize,
    pub diameter: u32,
    pub line_count: usize,
    pub universal: bool,
    pub family: Option<FamilyName>,
    pub violation: bool,
    /// Each line as sorted vertex indices of the canonically labelled graph.
    pub lines: Vec<Vec<usize>>,
}

/// Outcome of one verification run for a fixed order.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub diameter: u32,
    pub total_connected: u64,
    /// Classes with the requested diameter.
    pub total_diameter: u64,
    /// Sorted by canonical code.
    pub exceptions: Vec<ExceptionRecord>,
    pub min_line_count: Option<usize>,
    /// graph6 of the smallest-code graph attaining the minimum.
    pub min_line_graph6: Option<String>,
    /// graph6 of classes failing the Chen–Chvátal alternative.
    pub dichotomy_failures: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn violations(&self) -> impl Iterator<Item = &ExceptionRecord> {
        self.exceptions.iter().filter(|e| e.violation)
    }

    pub fn has_violation(&self) -> bool {
        self.violations().next().is_some() || !self.dichotomy_failures.is_empty()
    }

    pub fn exception_families(&self) -> Vec<Option<FamilyName>> {
        self.exceptions.iter().map(|e| e.family).collect()
    }
}

/// Where the graphs come from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Built-in canonical augmentation.
    Builtin,
    /// Externally supplied graphs, e.g. decoded from a graph6 stream. Graphs
    /// of other orders or disconnected ones are skipped and isomorphic
    /// duplicates counted once.
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Diameter filter; 2 checks the theorem, 3 surveys the diameter-3
    /// relatives.
    pub diameter: u32,
    pub exec: crate::parallel::Executor,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { diameter: 2, exec: Default::default() }
    }
}

pub const MIN_VERIFY_N: usize = 3;

#[derive(Default)]
struct Tally {
    exceptions: Vec<ExceptionRecord>,
    min: Option<(usize, CanonicalCode)>,
    dichotomy_failures: Vec<(CanonicalCode, String)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.exceptions.extend(other.exceptions);
        self.dichotomy_failures.extend(other.dichotomy_failures);
        self.min = match (self.min, other.min) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Examines one graph with the requested diameter.
fn examine(mut tally: Tally, g: &Graph, diameter_filter: u32) -> Result<Tally> {
    let d = DistanceMatrix::new(g)?;
    let lines = line_set_with(g, &d);
    let n = g.n();
    let count = lines.len();
    let universal = lines.contains(g.vertices());
    let code = canonical_form(g)?;
    if tally.min.is_none_or(|m| (count, code) < m) {
        tally.min = Some((count, code));
    }
    if count < n && !universal {
        tally.dichotomy_failures.push((code, graph6::encode(&code.to_graph())));
    }
    if count < n {
        let canon = code.to_graph();
        let canon_lines = line_set_with(&canon, &DistanceMatrix::new(&canon)?);
        let family = if diameter_filter == 2 { classify_family(&canon)? } else { classify_extended(&canon)? };
        tally.exceptions.push(ExceptionRecord {
            code,
            n,
            graph6: graph6::encode(&canon),
            edges: g.edge_count(),
            diameter: d.diameter(),
            line_count: count,
            universal,
            family,
            violation: diameter_filter == 2 && family.is_none(),
            lines: canon_lines.to_index_lists(),
        });
    }
    Ok(tally)
}

/// Counts lines of every connected class on `n` vertices with the requested
/// diameter and reports those with fewer lines than vertices.
pub fn verify_theorem(n: usize, source: &GraphSource, opts: &VerifyOptions) -> Result<VerificationReport> {
    if n > MAX_ENUM_N {
        return Err(Error::TooLarge { what: "verification", n, max: MAX_ENUM_N });
    }
    if n < MIN_VERIFY_N {
        return Err(Error::BadParameter(format!("verification needs n >= {MIN_VERIFY_N}, got {n}")));
    }
    let start = Instant::now();
    let dfilter = opts.diameter;
    let (total_connected, total_diameter, tally) = match source {
        GraphSource::Builtin => {
            let enumerator = Enumerator::new(opts.exec.clone());
            let cursor = EnumerationCursor::connected(n).with_diameter(dfilter);
            let (stats, tally) = enumerator.fold(
                &cursor,
                || Ok(Tally::default()),
                |acc: Result<Tally>, g| acc.and_then(|t| examine(t, g, dfilter)),
                |a, b| Ok(a?.merge(b?)),
            )?;
            (stats.generated, stats.visited, tally?)
        }
        GraphSource::Graphs(graphs) => {
            let mut seen = BTreeSet::new();
            let mut classes = Vec::new();
            for g in graphs.iter().filter(|g| g.n() == n && g.is_connected()) {
                let code = canonical_form(g)?;
                if seen.insert(code) {
                    classes.push(g);
                }
            }
            let connected = classes.len() as u64;
            let kept: Vec<&Graph> =
                classes.into_iter().filter(|g| crate::distance::diameter_if_connected(g) == Some(dfilter)).collect();
            let parts = opts.exec.map(&kept, |g| examine(Tally::default(), g, dfilter));
            let mut tally = Tally::default();
            for p in parts {
                tally = tally.merge(p?);
            }
            (connected, kept.len() as u64, tally)
        }
    };
    let mut exceptions = tally.exceptions;
    exceptions.sort_by_key(|e| e.code);
    let mut dichotomy = tally.dichotomy_failures;
    dichotomy.sort();
    Ok(VerificationReport {
        n,
        diameter: dfilter,
        total_connected,
        total_diameter,
        exceptions,
        min_line_count: tally.min.map(|m| m.0),
        min_line_graph6: tally.min.map(|m| m.1.to_graph6()),
        dichotomy_failures: dichotomy.into_iter().map(|(_, s)| s).collect(),
        elapsed: start.elapsed(),
    })
}

/// One row of the minimum-line profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub n: usize,
    pub diameter2_graphs: u64,
    pub min_lines: usize,
    pub argmin_graph6: String,
}

/// Minimum line count over diameter-2 graphs for each `n` in `3..=n_max`.
pub fn min_lines_profile(n_max: usize, exec: &crate::parallel::Executor) -> Result<Vec<ProfileRow>> {
    if n_max > MAX_ENUM_N {
        return Err(Error::TooLarge { what: "profile", n: n_max, max: MAX_ENUM_N });
    }
    let enumerator = Enumerator::new(exec.clone());
    let mut rows = Vec::new();
    for n in MIN_VERIFY_N..=n_max {
        let cursor = EnumerationCursor::connected(n).with_diameter(2);
        let (stats, best) = enumerator.fold(
            &cursor,
            || Ok(None),
            |acc: Result<Option<(usize, CanonicalCode)>>, g| {
                let best = acc?;
                let count = line_set_with(g, &DistanceMatrix::new(g)?).len();
                let cand = (count, canonical_form(g)?);
                Ok(Some(best.map_or(cand, |b: (usize, CanonicalCode)| b.min(cand))))
            },
            |a, b| {
                let (a, b) = (a?, b?);
                Ok(match (a, b) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                })
            },
        )?;
        if let Some((min_lines, code)) = best? {
            rows.push(ProfileRow { n, diameter2_graphs: stats.visited, min_lines, argmin_graph6: code.to_graph6() });
        }
    }
    Ok(rows)
}
