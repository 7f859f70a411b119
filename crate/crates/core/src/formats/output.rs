//! Machine-readable renderings of reports: JSON objects tagged with a
//! schema version, and tab-separated rows.

use serde::Serialize;
use serde_json::Value;

use crate::classify::InvariantReport;
use crate::simplicial::FieldTag;

pub const SCHEMA: &str = "vnum/1";

#[derive(Serialize)]
struct Envelope<'a> {
    schema: &'static str,
    name: Option<&'a str>,
    #[serde(flatten)]
    report: &'a InvariantReport,
}

#[derive(Serialize)]
struct ErrorEnvelope<'a> {
    schema: &'static str,
    name: Option<&'a str>,
    line: Option<usize>,
    error: &'a str,
}

/// A report as a JSON value whose first key is `"schema"`.
pub fn report_json(report: &InvariantReport, name: Option<&str>) -> Value {
    serde_json::to_value(Envelope { schema: SCHEMA, name, report }).expect("reports serialize")
}

/// An in-band error record for batch output.
pub fn error_json(name: Option<&str>, line: Option<usize>, error: &str) -> Value {
    serde_json::to_value(ErrorEnvelope { schema: SCHEMA, name, line, error }).expect("errors serialize")
}

/// Column names; per-field columns are expanded for both fields so that
/// rows from different runs line up.
pub fn tsv_header() -> String {
    let mut cols: Vec<String> = ["name", "kind", "vertices", "edges", "v", "i_dom", "gamma", "beta0", "alpha0", "dim"]
        .map(String::from)
        .to_vec();
    for f in FieldTag::ALL {
        cols.push(format!("reg_{f}"));
    }
    cols.extend(["well_covered", "one_well_covered", "w2", "edge_critical"].map(String::from));
    for f in FieldTag::ALL {
        cols.push(format!("cm_{f}"));
    }
    cols.push("vertex_decomposable".into());
    for f in FieldTag::ALL {
        cols.push(format!("sq_cm_{f}"));
    }
    cols.extend(["linear_resolution", "error"].map(String::from));
    cols.join("\t")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn tsv_row(report: &InvariantReport, name: Option<&str>) -> String {
    let r = report;
    let mut cols = vec![
        name.unwrap_or("-").to_string(),
        r.kind.to_string(),
        r.vertex_count.to_string(),
        r.edge_count.to_string(),
        r.v.to_string(),
        r.i_dom.to_string(),
        opt(r.gamma),
        r.beta0.to_string(),
        r.alpha0.to_string(),
        r.dim.to_string(),
    ];
    cols.extend(FieldTag::ALL.iter().map(|f| opt(r.reg.get(f))));
    cols.extend([r.well_covered.to_string(), r.one_well_covered.to_string(), opt(r.w2), opt(r.edge_critical)]);
    cols.extend(FieldTag::ALL.iter().map(|f| opt(r.cm.get(f))));
    cols.push(r.vertex_decomposable.to_string());
    cols.extend(
        FieldTag::ALL.iter().map(|f| opt(r.symbolic_square_cm.as_ref().and_then(|m| m.get(f)).map(|v| v.cohen_macaulay))),
    );
    cols.push(opt(r.linear_resolution));
    cols.push("-".into());
    cols.join("\t")
}

/// A row that only carries a name and an error message.
pub fn tsv_error_row(name: Option<&str>, error: &str) -> String {
    let width = tsv_header().split('\t').count();
    let mut cols = vec!["-".to_string(); width];
    cols[0] = name.unwrap_or("-").to_string();
    cols[width - 1] = error.replace(['\t', '\n'], " ");
    cols.join("\t")
}
