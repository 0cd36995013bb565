//! Machine-readable and text renderings of verification results.
//!
//! CSV and JSON output is a pure function of the report contents (timings
//! are excluded), so identical runs produce identical bytes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::claims::{ClaimSuiteReport, SuiteStatus};
use crate::error::{Error, Result};
use crate::verifier::{ExceptionRecord, ProfileRow, VerificationReport};

pub const CSV_COLUMNS: [&str; 8] =
    ["n", "graph6", "edges", "diameter", "line_count", "universal", "family", "violation"];

#[derive(Serialize)]
struct CsvRow<'a> {
    n: usize,
    graph6: &'a str,
    edges: usize,
    diameter: u32,
    line_count: usize,
    universal: bool,
    family: String,
    violation: bool,
}

impl<'a> From<&'a ExceptionRecord> for CsvRow<'a> {
    fn from(e: &'a ExceptionRecord) -> Self {
        CsvRow {
            n: e.n,
            graph6: &e.graph6,
            edges: e.edges,
            diameter: e.diameter,
            line_count: e.line_count,
            universal: e.universal,
            family: e.family.map(|f| f.to_string()).unwrap_or_default(),
            violation: e.violation,
        }
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

/// One row per exception across all reports, in report order.
pub fn verification_csv(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).map_err(csv_error)?;
    for r in reports {
        for e in &r.exceptions {
            w.serialize(CsvRow::from(e)).map_err(csv_error)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[derive(Serialize)]
struct JsonException<'a> {
    n: usize,
    graph6: &'a str,
    edges: usize,
    diameter: u32,
    line_count: usize,
    universal: bool,
    family: Option<String>,
    violation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    lines: Option<&'a Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    n: usize,
    diameter: u32,
    total_connected: u64,
    total_diameter: u64,
    min_line_count: Option<usize>,
    min_line_graph6: Option<&'a str>,
    dichotomy_failures: &'a [String],
    exceptions: Vec<JsonException<'a>>,
}

/// JSON document `{"reports": [...]}`; line sets are included when
/// `dump_lines` is set.
pub fn verification_json(reports: &[VerificationReport], dump_lines: bool) -> Result<String> {
    let reports: Vec<JsonReport> = reports
        .iter()
        .map(|r| JsonReport {
            n: r.n,
            diameter: r.diameter,
            total_connected: r.total_connected,
            total_diameter: r.total_diameter,
            min_line_count: r.min_line_count,
            min_line_graph6: r.min_line_graph6.as_deref(),
            dichotomy_failures: &r.dichotomy_failures,
            exceptions: r
                .exceptions
                .iter()
                .map(|e| JsonException {
                    n: e.n,
                    graph6: &e.graph6,
                    edges: e.edges,
                    diameter: e.diameter,
                    line_count: e.line_count,
                    universal: e.universal,
                    family: e.family.map(|f| f.to_string()),
                    violation: e.violation,
                    lines: (dump_lines || e.violation).then_some(&e.lines),
                })
                .collect(),
        })
        .collect();
    #[derive(Serialize)]
    struct Doc<'a> {
        reports: Vec<JsonReport<'a>>,
    }
    let mut s = serde_json::to_string_pretty(&Doc { reports }).map_err(|e| Error::Io(e.into()))?;
    s.push('\n');
    Ok(s)
}

/// Human-readable summary. Violations list their line sets.
pub fn verification_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let mut total = 0;
    for r in reports {
        total += r.exceptions.len();
        let _ = writeln!(
            out,
            "n={} diameter={}: {} connected, {} with diameter {}, {} with fewer lines than vertices, min lines {}",
            r.n,
            r.diameter,
            r.total_connected,
            r.total_diameter,
            r.diameter,
            r.exceptions.len(),
            r.min_line_count.map_or("-".to_string(), |m| m.to_string()),
        );
        for e in &r.exceptions {
            let fam = e.family.map_or("UNCLASSIFIED".to_string(), |f| f.to_string());
            let _ = writeln!(out, "  {:<12} lines={} edges={} {}", e.graph6, e.line_count, e.edges, fam);
            if e.violation {
                let _ = writeln!(out, "    THEOREM VIOLATION, lines: {:?}", e.lines);
            }
        }
        for g6 in &r.dichotomy_failures {
            let _ = writeln!(out, "  CHEN-CHVATAL FAILURE {g6}");
        }
    }
    let _ = writeln!(out, "total exceptions: {total}");
    out
}

pub fn profile_csv(rows: &[ProfileRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(csv_error)?;
    }
    if rows.is_empty() {
        w.write_record(["n", "diameter2_graphs", "min_lines", "argmin_graph6"]).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

pub fn claims_text(reports: &[ClaimSuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "n={}: {} diameter-2 graphs", r.n, r.graphs_checked);
        for s in &r.suites {
            let status = match s.status {
                SuiteStatus::Pass => "pass",
                SuiteStatus::Fail => "FAIL",
                SuiteStatus::Skipped => "skipped",
            };
            let _ = writeln!(out, "  {:<28} {:<7} {} checks", s.claim.to_string(), status, s.checks);
            if let Some(c) = &s.counterexample {
                let _ = writeln!(out, "    counterexample {}: {}", c.graph6, c.detail);
            }
        }
    }
    out
}
