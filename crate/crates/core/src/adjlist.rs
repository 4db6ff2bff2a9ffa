//! Neighbour-list text format.
//!
//! One line per vertex, labels 1-based:
//!
//! ```text
//! # comment
//! 1: 2 3 4 | 3
//! 2: 1 3 4 | 3
//! ```
//!
//! The optional `| t` suffix carries a claimed triangle-degree. Blank lines
//! and `#` comments are ignored. Rows must cover `1..=n` exactly once.

use crate::error::GraphError;
use crate::graph::{Graph, TriangleProfile};

/// A parsed neighbour-list document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyDocument {
    pub graph: Graph,
    /// The `| t` column, present only when every row carries one.
    pub claimed_t: Option<Vec<u32>>,
}

fn syntax(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Syntax {
        line,
        reason: reason.into(),
    }
}

fn parse_label(tok: &str, line: usize) -> Result<usize, GraphError> {
    tok.parse::<usize>()
        .map_err(|_| syntax(line, format!("expected a vertex label, found {tok:?}")))
}

/// Parses a neighbour-list document, keeping any `| t` column.
pub fn parse_adjacency_document(text: &str) -> Result<AdjacencyDocument, GraphError> {
    struct RowSpec {
        line: usize,
        vertex: usize,
        neighbours: Vec<usize>,
        t: Option<u32>,
    }

    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, rest) = content
            .split_once(':')
            .ok_or_else(|| syntax(line, "missing ':' after the vertex label"))?;
        let vertex = parse_label(head.trim(), line)?;
        let (list, t) = match rest.split_once('|') {
            Some((list, t)) => {
                let t = t.trim();
                let t = t
                    .parse::<u32>()
                    .map_err(|_| syntax(line, format!("bad triangle-degree {t:?}")))?;
                (list, Some(t))
            }
            None => (rest, None),
        };
        let neighbours = list
            .split_whitespace()
            .map(|tok| parse_label(tok, line))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(RowSpec {
            line,
            vertex,
            neighbours,
            t,
        });
    }

    let n = rows.len();
    let mut seen = vec![false; n];
    for row in &rows {
        if row.vertex == 0 || row.vertex > n {
            return Err(GraphError::LabelOutOfRange {
                line: row.line,
                label: row.vertex,
                n,
            });
        }
        if std::mem::replace(&mut seen[row.vertex - 1], true) {
            return Err(syntax(
                row.line,
                format!("row {} appears twice", row.vertex),
            ));
        }
    }

    let mut g = Graph::empty(n)?;
    let mut listed = vec![Vec::new(); n];
    for row in &rows {
        let v = row.vertex - 1;
        let mut mine = Vec::with_capacity(row.neighbours.len());
        for &label in &row.neighbours {
            if label == 0 || label > n {
                return Err(GraphError::LabelOutOfRange {
                    line: row.line,
                    label,
                    n,
                });
            }
            if label == row.vertex {
                return Err(GraphError::SelfLoop(row.vertex));
            }
            if mine.contains(&(label - 1)) {
                return Err(GraphError::DuplicateNeighbour {
                    vertex: row.vertex,
                    neighbour: label,
                });
            }
            mine.push(label - 1);
        }
        listed[v] = mine;
    }
    for (v, mine) in listed.iter().enumerate() {
        for &u in mine {
            if !listed[u].contains(&v) {
                return Err(GraphError::AsymmetricInput {
                    vertex: v + 1,
                    neighbour: u + 1,
                });
            }
            g.add_edge(v, u);
        }
    }

    let claimed_t = if !rows.is_empty() && rows.iter().all(|r| r.t.is_some()) {
        let mut t = vec![0; n];
        for row in &rows {
            t[row.vertex - 1] = row.t.unwrap_or_default();
        }
        Some(t)
    } else {
        None
    };
    Ok(AdjacencyDocument {
        graph: g,
        claimed_t,
    })
}

/// Parses a neighbour-list document, ignoring any `| t` column.
pub fn from_adjacency_list(text: &str) -> Result<Graph, GraphError> {
    parse_adjacency_document(text).map(|d| d.graph)
}

/// Renders a graph in neighbour-list form, with a `| t` column when a
/// profile is given. Every line ends with `\n`.
pub fn to_adjacency_list(g: &Graph, profile: Option<&TriangleProfile>) -> String {
    let mut out = String::new();
    for v in 0..g.order() {
        out.push_str(&format!("{}:", v + 1));
        for u in g.neighbours(v).iter() {
            out.push_str(&format!(" {}", u + 1));
        }
        if let Some(p) = profile {
            out.push_str(&format!(" | {}", p[v]));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_document() {
        let g = from_adjacency_list("1: 2 3\n2: 1 3\n3: 1 2\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn missing_reciprocal_edge() {
        assert_eq!(
            from_adjacency_list("1: 2\n2:\n"),
            Err(GraphError::AsymmetricInput {
                vertex: 1,
                neighbour: 2
            })
        );
    }

    #[test]
    fn error_variants() {
        assert_eq!(from_adjacency_list("1: 1\n"), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            from_adjacency_list("1: 2 2\n2: 1\n"),
            Err(GraphError::DuplicateNeighbour {
                vertex: 1,
                neighbour: 2
            })
        );
        assert_eq!(
            from_adjacency_list("1: 3\n2:\n"),
            Err(GraphError::LabelOutOfRange {
                line: 1,
                label: 3,
                n: 2
            })
        );
        assert!(matches!(
            from_adjacency_list("1 2 3\n"),
            Err(GraphError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            from_adjacency_list("1: 2\n1: 2\n"),
            Err(GraphError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn comments_blank_lines_and_t_column() {
        let text = "# K3\n\n1: 2 3 | 1\n2: 1 3 | 1   # ok\n3: 1 2 | 1\n";
        let doc = parse_adjacency_document(text).unwrap();
        assert_eq!(doc.claimed_t, Some(vec![1, 1, 1]));
        assert_eq!(
            to_adjacency_list(&doc.graph, Some(&doc.graph.triangle_profile())),
            "1: 2 3 | 1\n2: 1 3 | 1\n3: 1 2 | 1\n"
        );
        let partial = parse_adjacency_document("1: 2 | 0\n2: 1\n").unwrap();
        assert_eq!(partial.claimed_t, None);
    }
}
