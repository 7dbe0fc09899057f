use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Parses an edge-list document: one `<tail> <head>` pair per line, `#`
/// comments and blank lines ignored. Repeated lines become parallel edges.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (tail, head) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => (u, v),
            (Some(_), None, _) => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: "missing head token".into(),
                })
            }
            _ => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected `<tail> <head>`, found `{line}`"),
                })
            }
        };
        let u = g.intern(tail);
        let v = g.intern(head);
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Renders the graph in the edge-list format accepted by [`parse_graph`].
///
/// Isolated nodes cannot be expressed in the format and are dropped.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        let _ = writeln!(out, "{} {}", g.name(u), g.name(v));
    }
    out
}
