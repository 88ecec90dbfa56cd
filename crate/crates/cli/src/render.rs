//! Deterministic JSON and CSV rendering of identity reports.
//!
//! Big integers are rendered as decimal strings; JSON object keys follow a
//! fixed order so identical inputs produce byte-identical output.

use std::collections::BTreeMap;

use serde::Serialize;

use pedpod_core::identities::IdentityReport;

#[derive(Serialize)]
struct JsonReport<'a> {
    identity: &'a str,
    params: BTreeMap<&'static str, u64>,
    n_max: u64,
    method: String,
    rows: Vec<JsonRow>,
    verdict: bool,
}

#[derive(Serialize)]
struct JsonRow {
    n: u64,
    lhs: String,
    rhs: String,
    pass: bool,
}

/// Renders the report as a single-line JSON document.
pub fn report_to_json(report: &IdentityReport) -> String {
    let doc = JsonReport {
        identity: &report.identity,
        params: report.params.iter().copied().collect(),
        n_max: report.n_max,
        method: report.method.to_string(),
        rows: report
            .rows
            .iter()
            .map(|r| JsonRow {
                n: r.n,
                lhs: r.lhs.to_string(),
                rhs: r.rhs.to_string(),
                pass: r.pass,
            })
            .collect(),
        verdict: report.verdict,
    };
    serde_json::to_string(&doc).expect("report serialization cannot fail")
}

/// Renders the rows as CSV with header `n,lhs,rhs,pass`.
pub fn report_to_csv(report: &IdentityReport) -> String {
    let mut out = String::from("n,lhs,rhs,pass\n");
    for r in &report.rows {
        out.push_str(&format!("{},{},{},{}\n", r.n, r.lhs, r.rhs, r.pass));
    }
    out
}
