//! IO companion to `pedpod-core`: OEIS b-file parsing and cross-checks,
//! and deterministic JSON/CSV rendering of identity reports.

pub mod bfile;
pub mod render;

pub use bfile::{oeis_check_family, oeis_check_values, BFile, OeisCheck};
pub use render::{report_to_csv, report_to_json};
