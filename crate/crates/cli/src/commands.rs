use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::json;

use vnum_core::classify::{full_report, is_edge_critical, symbolic_square_cm_checked, InvariantReport, ReportOptions};
use vnum_core::formats::catalog::CM36;
use vnum_core::formats::output::{error_json, report_json, tsv_error_row, tsv_header, tsv_row, SCHEMA};
use vnum_core::formats::{parse_edge_list, parse_graph6, InputDocument};
use vnum_core::{EdgeIdeal, FieldTag};

use crate::input::{load, read_text};
use crate::{Common, Failure, LineFormat};

fn io(e: std::io::Error) -> Failure {
    Failure::Input(format!("write failed: {e}"))
}

fn options(common: &Common) -> ReportOptions {
    ReportOptions { fields: common.field.fields(), oracle_cap: common.oracle_cap }
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn render_text(r: &InvariantReport, name: Option<&str>, out: &mut dyn Write) -> std::io::Result<()> {
    if let Some(name) = name {
        writeln!(out, "name: {name}")?;
    }
    writeln!(out, "{} on {} vertices with {} edges", r.kind, r.vertex_count, r.edge_count)?;
    if !r.isolated_vertices.is_empty() {
        writeln!(out, "isolated vertices: {:?}", r.isolated_vertices)?;
    }
    writeln!(out, "v-number: {} (witness {:?})", r.v, r.v_witness)?;
    writeln!(out, "dim: {}  beta0: {}  alpha0: {}", r.dim, r.beta0, r.alpha0)?;
    match r.gamma {
        Some(g) => writeln!(out, "independent domination: {}  domination: {g}", r.i_dom)?,
        None => writeln!(out, "independent domination: {}", r.i_dom)?,
    }
    for (f, reg) in &r.reg {
        writeln!(out, "reg over {f}: {reg}")?;
    }
    writeln!(out, "well-covered: {}  1-well-covered: {}", yes_no(Some(r.well_covered)), yes_no(Some(r.one_well_covered)))?;
    writeln!(out, "W2: {}", yes_no(r.w2))?;
    match r.edge_critical_violation {
        Some([a, b]) => writeln!(out, "edge-critical: no (edge {{{a}, {b}}} keeps beta0)")?,
        None => writeln!(out, "edge-critical: {}", yes_no(r.edge_critical))?,
    }
    for (f, cm) in &r.cm {
        writeln!(out, "Cohen-Macaulay over {f}: {}", yes_no(Some(*cm)))?;
    }
    writeln!(out, "vertex decomposable: {}", yes_no(Some(r.vertex_decomposable)))?;
    if let Some(sq) = &r.symbolic_square_cm {
        for (f, verdict) in sq {
            let oracle = match verdict.oracle {
                Some(_) => "confirmed by polarization",
                None => "oracle skipped",
            };
            writeln!(out, "symbolic square CM over {f}: {} ({oracle})", yes_no(Some(verdict.cohen_macaulay)))?;
        }
    }
    writeln!(out, "linear resolution: {}", yes_no(r.linear_resolution))
}

pub fn report(file: &Path, common: &Common, out: &mut dyn Write) -> Result<(), Failure> {
    let doc = load(file)?;
    let r = full_report(doc.clutter(), &options(common))?;
    let name = doc.name.as_deref();
    if common.json {
        let text = serde_json::to_string_pretty(&report_json(&r, name)).expect("json");
        writeln!(out, "{text}").map_err(io)
    } else if common.tsv {
        writeln!(out, "{}\n{}", tsv_header(), tsv_row(&r, name)).map_err(io)
    } else {
        render_text(&r, name, out).map_err(io)
    }
}

pub fn symbolic_power(file: &Path, k: u32, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure::Input("the power must be at least 1".into()));
    }
    let doc = load(file)?;
    let ideal = EdgeIdeal::new(doc.clutter()).symbolic_power(k)?;
    if json {
        let gens: Vec<String> = ideal.generators().iter().map(ToString::to_string).collect();
        let exps: Vec<&[u32]> = ideal.generators().iter().map(|g| g.exponents()).collect();
        let value = json!({
            "schema": SCHEMA,
            "name": doc.name,
            "power": k,
            "generators": gens,
            "exponents": exps,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json")).map_err(io)
    } else {
        for g in ideal.generators() {
            writeln!(out, "{g}").map_err(io)?;
        }
        Ok(())
    }
}

pub fn verify_cm36(common: &Common, out: &mut dyn Write) -> Result<(), Failure> {
    let extra_gf2 = common.field.fields().contains(&FieldTag::Gf2);
    let rows: Vec<Result<serde_json::Value, Failure>> = CM36
        .par_iter()
        .map(|fx| {
            let g = fx.graph()?;
            let sq = symbolic_square_cm_checked(&g, FieldTag::Rationals, common.oracle_cap)?;
            let ec = is_edge_critical(&g)?;
            let gf2 = if extra_gf2 {
                Some(symbolic_square_cm_checked(&g, FieldTag::Gf2, common.oracle_cap)?.cohen_macaulay)
            } else {
                None
            };
            Ok(json!({
                "label": fx.label,
                "vertices": fx.vertex_count,
                "edges": fx.edges.len(),
                "symbolic_square_cm_Q": sq.cohen_macaulay,
                "oracle_Q": sq.oracle,
                "symbolic_square_cm_GF2": gf2,
                "edge_critical": ec,
                "pass": sq.cohen_macaulay && ec,
            }))
        })
        .collect();
    let mut values = Vec::new();
    let mut disagreements = Vec::new();
    for (fx, row) in CM36.iter().zip(rows) {
        match row {
            Ok(v) => values.push(v),
            Err(f) => disagreements.push(format!("{}: {}", fx.label, f.message())),
        }
    }
    let failed: Vec<&str> = values.iter().filter(|v| v["pass"] == false).filter_map(|v| v["label"].as_str()).collect();
    let passed = values.len() - failed.len();
    let small = CM36.iter().filter(|f| f.vertex_count < 9).count();
    let nine = CM36.iter().filter(|f| f.vertex_count == 9).count();
    if common.json {
        let value = json!({
            "schema": SCHEMA,
            "table": "cm36",
            "rows": values,
            "passed": passed,
            "total": CM36.len(),
            "split": {"fewer_than_9": small, "nine": nine},
            "failed": failed,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json")).map_err(io)?;
    } else {
        for v in &values {
            let mark = if v["pass"] == true { "PASS" } else { "FAIL" };
            let oracle = match v["oracle_Q"].as_bool() {
                Some(_) => "oracle agrees",
                None => "oracle skipped",
            };
            write!(
                out,
                "{mark}\t{}\t{} vertices\t{} edges\tsymbolic square CM over Q: {}\tedge-critical: {}\t{oracle}",
                v["label"].as_str().unwrap_or("?"),
                v["vertices"],
                v["edges"],
                v["symbolic_square_cm_Q"],
                v["edge_critical"],
            )
            .map_err(io)?;
            if let Some(b) = v["symbolic_square_cm_GF2"].as_bool() {
                write!(out, "\tover GF2: {b}").map_err(io)?;
            }
            writeln!(out).map_err(io)?;
        }
        writeln!(out, "{passed}/{} passed; split {small} + {nine} (fewer than 9 vertices + 9 vertices)", CM36.len())
            .map_err(io)?;
    }
    if !disagreements.is_empty() {
        return Err(Failure::Disagreement(disagreements.join("; ")));
    }
    if !failed.is_empty() {
        return Err(Failure::Assertion(format!("fixtures failed: {}", failed.join(", "))));
    }
    Ok(())
}

pub fn count_edge_critical(
    path: &Path,
    expect: (Option<usize>, Option<usize>),
    common: &Common,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let text = read_text(path)?;
    let lines: Vec<(usize, &str)> =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty()).collect();
    let results: Vec<Result<Option<(usize, bool)>, Failure>> = lines
        .par_iter()
        .map(|&(lineno, line)| {
            let g = parse_graph6(line).map_err(|e| Failure::Input(format!("line {lineno}: {e}")))?;
            if !g.is_connected() {
                return Ok(None);
            }
            Ok(Some((g.vertex_count(), is_edge_critical(&g)?)))
        })
        .collect();
    let mut per_n: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut skipped = 0;
    for r in results {
        match r? {
            None => skipped += 1,
            Some((n, ec)) => {
                let e = per_n.entry(n).or_default();
                e.0 += 1;
                e.1 += ec as usize;
            }
        }
    }
    let in_range: usize = per_n.range(2..=9).map(|(_, c)| c.1).sum();
    let nine = per_n.get(&9).map_or(0, |c| c.1);
    if common.json {
        let rows: Vec<_> = per_n
            .iter()
            .map(|(n, (graphs, ec))| json!({"vertices": n, "graphs": graphs, "edge_critical": ec}))
            .collect();
        let value = json!({
            "schema": SCHEMA,
            "per_vertex_count": rows,
            "skipped_disconnected": skipped,
            "edge_critical_2_to_9": in_range,
            "edge_critical_9": nine,
            "edge_critical_2_to_8": in_range - nine,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json")).map_err(io)?;
    } else {
        writeln!(out, "vertices\tgraphs\tedge_critical").map_err(io)?;
        for (n, (graphs, ec)) in &per_n {
            writeln!(out, "{n}\t{graphs}\t{ec}").map_err(io)?;
        }
        writeln!(out, "skipped disconnected: {skipped}").map_err(io)?;
        writeln!(
            out,
            "edge-critical with 2-9 vertices: {in_range} (9 vertices: {nine}, at most 8: {})",
            in_range - nine
        )
        .map_err(io)?;
    }
    let mut wrong = Vec::new();
    if let Some(t) = expect.0.filter(|&t| t != in_range) {
        wrong.push(format!("expected {t} edge-critical graphs with 2-9 vertices, found {in_range}"));
    }
    if let Some(t) = expect.1.filter(|&t| t != nine) {
        wrong.push(format!("expected {t} edge-critical graphs with 9 vertices, found {nine}"));
    }
    if wrong.is_empty() {
        Ok(())
    } else {
        Err(Failure::Assertion(wrong.join("; ")))
    }
}

fn resolve(line: &str, base: Option<&Path>) -> PathBuf {
    let p = PathBuf::from(line);
    if p.is_relative() && !p.exists() {
        if let Some(dir) = base {
            let joined = dir.join(&p);
            if joined.exists() {
                return joined;
            }
        }
    }
    p
}

fn batch_line(line: &str, format: LineFormat, base: Option<&Path>) -> Result<InputDocument, vnum_core::Error> {
    let as_file = |p: &Path| -> Result<InputDocument, vnum_core::Error> {
        let text = std::fs::read_to_string(p).map_err(|e| vnum_core::Error::parse(0, format!("{}: {e}", p.display())))?;
        let mut doc = parse_edge_list(&text)?;
        doc.name.get_or_insert_with(|| line.to_string());
        Ok(doc)
    };
    match format {
        LineFormat::Files => as_file(&resolve(line, base)),
        LineFormat::Graph6 => Ok(InputDocument::from_graph(&parse_graph6(line)?, Some(line.to_string()))),
        LineFormat::Auto => {
            let p = resolve(line, base);
            if p.is_file() {
                as_file(&p)
            } else {
                Ok(InputDocument::from_graph(&parse_graph6(line)?, Some(line.to_string())))
            }
        }
    }
}

pub fn batch(file: &Path, format: LineFormat, common: &Common, out: &mut dyn Write) -> Result<(), Failure> {
    let text = read_text(file)?;
    let base = (file.as_os_str() != "-").then(|| file.parent().unwrap_or(Path::new("."))).map(Path::to_path_buf);
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let opts = options(common);
    let results: Vec<(usize, Option<String>, Result<InvariantReport, vnum_core::Error>)> = lines
        .par_iter()
        .map(|&(lineno, line)| match batch_line(line, format, base.as_deref()) {
            Ok(doc) => (lineno, doc.name.clone(), full_report(doc.clutter(), &opts)),
            Err(e) => (lineno, Some(line.to_string()), Err(e)),
        })
        .collect();
    let mut disagreements = 0;
    if !common.json {
        writeln!(out, "line\t{}", tsv_header()).map_err(io)?;
    }
    for (lineno, name, result) in &results {
        let name = name.as_deref();
        match result {
            Ok(r) if common.json => {
                let mut v = report_json(r, name);
                v.as_object_mut().expect("object").insert("line".into(), json!(lineno));
                writeln!(out, "{}", serde_json::to_string(&v).expect("json")).map_err(io)?;
            }
            Ok(r) => writeln!(out, "{lineno}\t{}", tsv_row(r, name)).map_err(io)?,
            Err(e) => {
                if matches!(e, vnum_core::Error::RouteDisagreement { .. }) {
                    disagreements += 1;
                }
                let msg = e.to_string();
                if common.json {
                    writeln!(out, "{}", serde_json::to_string(&error_json(name, Some(*lineno), &msg)).expect("json"))
                        .map_err(io)?;
                } else {
                    writeln!(out, "{lineno}\t{}", tsv_error_row(name, &msg)).map_err(io)?;
                }
            }
        }
    }
    if disagreements > 0 {
        return Err(Failure::Disagreement(format!("{disagreements} input(s) had cross-route disagreements")));
    }
    Ok(())
}
