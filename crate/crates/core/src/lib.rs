//! Lines of graph metrics.
//!
//! The crate computes the lines of the shortest-path metric of a small graph,
//! builds the extremal graphs with fewer lines than vertices, and checks by
//! exhaustive enumeration that among graphs of diameter two these are the
//! only ones.

pub mod canonical;
pub mod claims;
pub mod distance;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod lines;
pub mod parallel;
pub mod report;
pub mod verifier;
pub mod vertex_set;

pub use canonical::{are_isomorphic, canonical_form, classify_family, CanonicalCode};
pub use distance::{diameter, DistanceMatrix};
pub use enumerate::{enumerate_connected, enumerate_naive, EnumerationCursor, Enumerator};
pub use error::{Error, Result};
pub use family::FamilyName;
pub use graph::Graph;
pub use lines::{count_lines, has_universal_line, line_diam2, line_general, line_set, LineSet};
pub use parallel::Executor;
pub use verifier::{check_chen_chvatal, min_lines_profile, verify_theorem, GraphSource, VerificationReport};
pub use vertex_set::VertexSet;
