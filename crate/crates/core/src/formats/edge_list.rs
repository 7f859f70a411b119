//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! graph 5 pentagon
//! 1 2
//! 2 3
//! ```
//!
//! The header is `graph <s>` or `clutter <s>`, optionally followed by a
//! name. Every later non-blank line lists the 1-based vertices of one edge.

use std::fmt::Write as _;

use serde::Serialize;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    Graph,
    Clutter,
}

/// A parsed and validated input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub kind: DocumentKind,
    pub name: Option<String>,
    clutter: Clutter,
}

impl InputDocument {
    pub fn from_graph(g: &Graph, name: Option<String>) -> Self {
        InputDocument { kind: DocumentKind::Graph, name, clutter: g.clutter().clone() }
    }

    pub fn from_clutter(c: &Clutter, name: Option<String>) -> Self {
        InputDocument { kind: DocumentKind::Clutter, name, clutter: c.clone() }
    }

    pub fn vertex_count(&self) -> usize {
        self.clutter.vertex_count()
    }

    pub fn edges(&self) -> Vec<Vec<usize>> {
        self.clutter.edge_lists()
    }

    pub fn clutter(&self) -> &Clutter {
        &self.clutter
    }

    /// Graph view; fails for documents declared as clutters with a non-pair edge.
    pub fn graph(&self) -> Result<Graph> {
        Graph::from_clutter(self.clutter.clone())
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim()
}

pub fn parse_edge_list(text: &str) -> Result<InputDocument> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l))).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `graph <s>` or `clutter <s>` header"))?;
    let mut tokens = header.split_whitespace();
    let kind = match tokens.next() {
        Some("graph") => DocumentKind::Graph,
        Some("clutter") => DocumentKind::Clutter,
        Some(other) => return Err(Error::parse(hline, format!("expected `graph` or `clutter`, found {other:?}"))),
        None => unreachable!("blank lines are filtered"),
    };
    let n: usize = tokens
        .next()
        .ok_or_else(|| Error::parse(hline, "missing vertex count"))?
        .parse()
        .map_err(|_| Error::parse(hline, "vertex count is not a nonnegative integer"))?;
    if n > MAX_VERTICES {
        return Err(Error::parse(hline, Error::TooManyVertices(n).to_string()));
    }
    let rest: Vec<&str> = tokens.collect();
    let name = (!rest.is_empty()).then(|| rest.join(" "));

    let mut edges: Vec<(usize, VertexSet)> = Vec::new();
    for (lineno, line) in lines {
        let mut verts = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| Error::parse(lineno, format!("{tok:?} is not a vertex index")))?;
            if v == 0 || v > n {
                return Err(Error::parse(lineno, Error::VertexOutOfRange { vertex: v, ambient: n }.to_string()));
            }
            verts.push(v);
        }
        if kind == DocumentKind::Graph {
            if verts.len() != 2 {
                return Err(Error::parse(lineno, Error::NotAGraphEdge(verts.len()).to_string()));
            }
            if verts[0] == verts[1] {
                return Err(Error::parse(lineno, Error::Loop(verts[0]).to_string()));
            }
        }
        let set = VertexSet::from_vertices(n, verts.iter().copied()).expect("indices checked");
        if set.len() != verts.len() {
            return Err(Error::parse(lineno, "repeated vertex within an edge"));
        }
        if let Some((first, _)) = edges.iter().find(|(_, e)| *e == set) {
            return Err(Error::parse(lineno, format!("{} (first seen on line {first})", Error::DuplicateEdge(set.to_string()))));
        }
        if let Some((other, e)) = edges.iter().find(|(_, e)| e.bits() & !set.bits() == 0 || set.bits() & !e.bits() == 0) {
            let (smaller, larger) = if e.len() < set.len() { (e, &set) } else { (&set, e) };
            return Err(Error::parse(
                lineno,
                format!(
                    "{} (conflicts with line {other})",
                    Error::NotAntichain { smaller: smaller.to_string(), larger: larger.to_string() }
                ),
            ));
        }
        edges.push((lineno, set));
    }
    let clutter = Clutter::new(n, edges.into_iter().map(|(_, e)| e).collect())?;
    Ok(InputDocument { kind, name, clutter })
}

/// Canonical text form: header, then edges in sorted order.
pub fn render_edge_list(doc: &InputDocument) -> String {
    let mut out = String::new();
    let kind = match doc.kind {
        DocumentKind::Graph => "graph",
        DocumentKind::Clutter => "clutter",
    };
    write!(out, "{kind} {}", doc.vertex_count()).unwrap();
    if let Some(name) = &doc.name {
        write!(out, " {name}").unwrap();
    }
    out.push('\n');
    for e in doc.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
