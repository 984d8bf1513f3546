//! Plain-text digraph format and DOT export.
//!
//! Format: the first non-comment line holds the vertex count `n`; each
//! following non-empty line holds one arc as `u v`. Lines starting with `#`
//! are comments.

use crate::digraph::{Digraph, GraphError};

pub fn parse_digraph(text: &str) -> Result<Digraph, GraphError> {
    let mut digraph: Option<Digraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match digraph {
            None => {
                let n: usize = line.parse().map_err(|_| GraphError::Parse {
                    line: line_no,
                    msg: format!("expected vertex count, got {line:?}"),
                })?;
                digraph = Some(Digraph::new(n));
            }
            Some(ref mut d) => {
                let mut parts = line.split_whitespace();
                let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => {
                        return Err(GraphError::Parse {
                            line: line_no,
                            msg: format!("expected \"u v\", got {line:?}"),
                        })
                    }
                };
                let parse_endpoint = |s: &str| {
                    s.parse::<usize>().map_err(|_| GraphError::Parse {
                        line: line_no,
                        msg: format!("bad vertex id {s:?}"),
                    })
                };
                let (u, v) = (parse_endpoint(u)?, parse_endpoint(v)?);
                d.add_arc(u, v).map_err(|e| GraphError::Parse {
                    line: line_no,
                    msg: e.to_string(),
                })?;
            }
        }
    }
    digraph.ok_or(GraphError::Parse {
        line: 0,
        msg: "missing vertex count line".into(),
    })
}

/// Inverse of [`parse_digraph`]; arcs come out in lexicographic order.
pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = format!("{}\n", d.n());
    for (u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// DOT export, one directed edge statement per arc.
pub fn to_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph {\n");
    for v in d.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in d.arcs() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}
