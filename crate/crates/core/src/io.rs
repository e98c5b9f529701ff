//! Edge-list text and DOT.
//!
//! Edge-list format: a header line `n m`, then `m` lines `u v`. Blank lines
//! and `#` comments are ignored on input; output is canonical (single
//! spaces, trailing newline, edges in identity order).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut rows = text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            None
        } else {
            Some((i + 1, content))
        }
    });
    let (header_line, header) = rows.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, content) in rows {
        if pairs.len() == m {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("more than the declared {m} edges"),
            });
        }
        let [u, v] = parse_pair(line, content)?;
        if u == v {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("loop at vertex {u}"),
            });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("endpoint out of range: ({u}, {v}) with n = {n}"),
            });
        }
        pairs.push((u, v));
        last_line = line;
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: last_line + 1,
            column: 1,
            message: format!("expected {m} edges, found {}", pairs.len()),
        });
    }
    Multigraph::build(n, &pairs)
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let mut out = [0usize; 2];
    let mut count = 0;
    let mut offset = 0;
    for token in content.split_whitespace() {
        let column = content[offset..].find(token).map_or(1, |p| offset + p + 1);
        offset = column - 1 + token.len();
        if count == 2 {
            return Err(Error::Parse {
                line,
                column,
                message: format!("unexpected token {token:?}"),
            });
        }
        out[count] = token.parse().map_err(|_| Error::Parse {
            line,
            column,
            message: format!("expected a non-negative integer, found {token:?}"),
        })?;
        count += 1;
    }
    if count < 2 {
        return Err(Error::Parse {
            line,
            column: content.len() + 1,
            message: "expected two integers".into(),
        });
    }
    Ok(out)
}

pub fn emit_edge_list(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Undirected DOT; edges are labelled with their identity.
pub fn emit_dot(g: &Multigraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "  {u} -- {v} [label=\"{e}\"];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_triangle() {
        let g = parse_edge_list("3 3\n0 1\n0 2\n1 2\n").unwrap();
        assert_eq!(g, Multigraph::complete(3));
    }

    #[test]
    fn canonicalizes() {
        let g = parse_edge_list("# K3\n3   3\n\n0 1\n 1 2 # middle\n0 2").unwrap();
        assert_eq!(emit_edge_list(&g), "3 3\n0 1\n1 2\n0 2\n");
    }

    #[test]
    fn loop_is_rejected_with_position() {
        match parse_edge_list("3 1\n0 0\n") {
            Err(Error::Parse { line, message, .. }) => {
                assert_eq!(line, 2);
                assert!(message.contains("loop"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_edge_list("2 1\n0 x\n"),
            Err(Error::Parse { line: 2, column: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 2\n0 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 0\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_edge_list("2 1 7\n"),
            Err(Error::Parse { column: 5, .. })
        ));
    }

    #[test]
    fn dot_lists_every_edge() {
        let dot = emit_dot(&Multigraph::build(2, &[(0, 1), (0, 1)]).unwrap());
        assert_eq!(dot.matches("--").count(), 2);
        assert!(dot.contains("label=\"1\""));
    }
}
