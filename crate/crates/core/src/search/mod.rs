//! Graph enumeration, constrained extremal scans and local search.

pub mod constraints;
pub mod enumerate;
pub mod local;
pub mod scan;

pub use constraints::ConstraintSet;
pub use enumerate::{enumerate_codes, enumerate_graphs, ENUMERATION_MAX_VERTICES};
pub use local::{local_search, LocalOptions, LocalResult, Move, TraceStep};
pub use scan::{
    extremal_scan, scan_exhaustive, scan_graph6, sha256_hex, Leaders, ScanEntry, ScanMode,
    ScanOptions, SearchReport, EMPIRICAL_LABEL, REPORT_SCHEMA,
};
