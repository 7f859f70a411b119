//! The graph6 encoding: printable bytes carrying 6 bits each, first the
//! vertex count, then the upper triangle of the adjacency matrix column by
//! column.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

fn sixes(line: &str) -> Result<Vec<u8>> {
    line.bytes()
        .enumerate()
        .map(|(pos, b)| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Error::parse(1, format!("byte {b} at offset {pos} is outside 63..=126")))
            }
        })
        .collect()
}

fn decode_size(d: &[u8]) -> Result<(usize, usize)> {
    let truncated = || Error::parse(1, "truncated vertex count");
    match d.first() {
        None => Err(truncated()),
        Some(&x) if x < 63 => Ok((x as usize, 1)),
        Some(_) => {
            let (start, len) = if d.get(1) == Some(&63) { (2, 6) } else { (1, 3) };
            let groups = d.get(start..start + len).ok_or_else(truncated)?;
            let n = groups.iter().fold(0usize, |acc, &g| (acc << 6) | g as usize);
            Ok((n, start + len))
        }
    }
}

/// Decodes one graph6 line; the optional `>>graph6<<` prefix is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let data = sixes(line)?;
    let (n, used) = decode_size(&data)?;
    if n > MAX_VERTICES {
        return Err(Error::parse(1, Error::TooManyVertices(n).to_string()));
    }
    let bits_needed = n * n.saturating_sub(1) / 2;
    let body = &data[used..];
    let bytes_needed = bits_needed.div_ceil(6);
    if body.len() < bytes_needed {
        return Err(Error::parse(1, format!("truncated: {n} vertices need {bytes_needed} adjacency bytes, found {}", body.len())));
    }
    if body.len() > bytes_needed {
        return Err(Error::parse(1, "trailing bytes after the adjacency data"));
    }
    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encodes a graph; inverse of [`parse_graph6`].
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8);
    } else {
        out.push(63);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.is_adjacent(i + 1, j + 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    out.into_iter().map(|b| (b + 63) as char).collect()
}
