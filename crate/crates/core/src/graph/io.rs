//! Plain-text edge lists: one `i j [w]` per line, `#` comments, LF or CRLF.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Parses an edge list. The node count is one past the largest index seen.
pub fn load_edge_list(text: &str, one_indexed: bool) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut n = 0usize;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if fields.len() > 3 || fields.len() < 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected \"i j [w]\", found {} fields", fields.len()),
            });
        }
        let index = |s: &str| -> Result<usize> {
            let raw: usize = s.parse().map_err(|_| Error::Parse {
                line,
                message: format!("invalid node index {s:?}"),
            })?;
            if one_indexed {
                raw.checked_sub(1).ok_or_else(|| Error::Parse {
                    line,
                    message: "node index 0 in a one-indexed file".into(),
                })
            } else {
                Ok(raw)
            }
        };
        let a = index(fields[0])?;
        let b = index(fields[1])?;
        let w = match fields.get(2) {
            Some(s) => s.parse::<f64>().map_err(|_| Error::Parse {
                line,
                message: format!("invalid weight {s:?}"),
            })?,
            None => 1.0,
        };
        if a == b {
            return Err(Error::Parse {
                line,
                message: format!("self-loop on node {}", fields[0]),
            });
        }
        if !(w > 0.0) || !w.is_finite() {
            return Err(Error::Parse {
                line,
                message: format!("nonpositive weight {}", fields[2]),
            });
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if !seen.insert((u, v)) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {} {}", fields[0], fields[1]),
            });
        }
        n = n.max(v + 1);
        edges.push(Edge { u, v, weight: w });
    }
    Ok(Graph::from_checked(n, edges))
}

pub fn read_edge_list_file(path: impl AsRef<Path>, one_indexed: bool) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    load_edge_list(&text, one_indexed)
}

/// Writes `u v` lines for unit-weight graphs and `u v w` lines otherwise, with
/// weights at 17 significant digits.
pub fn write_edge_list(g: &Graph, one_indexed: bool) -> String {
    let shift = usize::from(one_indexed);
    let weighted = !g.is_unweighted();
    let mut out = String::new();
    for e in g.edges() {
        if weighted {
            let _ = writeln!(out, "{} {} {:.16e}", e.u + shift, e.v + shift, e.weight);
        } else {
            let _ = writeln!(out, "{} {}", e.u + shift, e.v + shift);
        }
    }
    out
}
