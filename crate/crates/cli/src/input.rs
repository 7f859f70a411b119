use std::io::Read;
use std::path::Path;

use vnum_core::formats::{parse_edge_list, parse_graph6, InputDocument};

use crate::Failure;

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split_once('#').map_or(l, |(h, _)| h).trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("graph") || l.starts_with("clutter"))
}

/// Parses either an edge list or a single graph6 line.
pub fn parse_document(text: &str, fallback_name: Option<String>) -> Result<InputDocument, vnum_core::Error> {
    if looks_like_edge_list(text) {
        let mut doc = parse_edge_list(text)?;
        if doc.name.is_none() {
            doc.name = fallback_name;
        }
        Ok(doc)
    } else {
        let line = text.trim();
        let g = parse_graph6(line)?;
        Ok(InputDocument::from_graph(&g, fallback_name.or_else(|| Some(line.to_string()))))
    }
}

pub fn load(path: &Path) -> Result<InputDocument, Failure> {
    let text = read_text(path)?;
    let name = (path.as_os_str() != "-").then(|| path.display().to_string());
    parse_document(&text, name).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}
