//! The line-based graph format and its JSON mirror.
//!
//! ```text
//! graph k4
//! v 4
//! e 1 1 2
//! e 2 1 3
//! ```
//!
//! `v <count>` declares vertices `1..=count`; `vl <id>...` lists them.
//! `#` starts a comment.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use cyclenest::{EdgeId, Multigraph, VertexId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid JSON graph document: {0}")]
    Json(String),
    #[error("{0}")]
    Graph(#[from] cyclenest::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: u32,
    pub u: u32,
    pub v: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default = "default_name")]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_count: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<u32>>,
    #[serde(default)]
    pub edges: Vec<EdgeRecord>,
}

fn default_name() -> String {
    "unnamed".to_string()
}

impl GraphDocument {
    /// Normalised document of a graph: sorted records, `v` form when the
    /// vertices are exactly `1..=n`.
    pub fn from_graph(name: &str, g: &Multigraph) -> GraphDocument {
        let ids: Vec<u32> = g.vertices().iter().map(|v| v.0).collect();
        let consecutive = ids.iter().enumerate().all(|(i, &v)| v == i as u32 + 1);
        GraphDocument {
            name: name.to_string(),
            vertex_count: consecutive.then_some(ids.len() as u32),
            vertices: (!consecutive).then_some(ids),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.0,
                    u: e.u.0,
                    v: e.v.0,
                })
                .collect(),
        }
    }

    pub fn vertex_ids(&self) -> Vec<u32> {
        match (&self.vertices, self.vertex_count) {
            (Some(vs), _) => vs.clone(),
            (None, Some(n)) => (1..=n).collect(),
            (None, None) => vec![],
        }
    }

    pub fn to_graph(&self) -> Result<Multigraph, ParseError> {
        Ok(Multigraph::new(
            self.vertex_ids().into_iter().map(VertexId),
            self.edges.iter().map(|e| (EdgeId(e.id), VertexId(e.u), VertexId(e.v))),
        )?)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("graph {}\n", self.name);
        match (&self.vertices, self.vertex_count) {
            (Some(vs), _) => {
                out.push_str("vl");
                for v in vs {
                    write!(out, " {v}").unwrap();
                }
                out.push('\n');
            }
            (None, Some(n)) => writeln!(out, "v {n}").unwrap(),
            (None, None) => out.push_str("v 0\n"),
        }
        for e in &self.edges {
            writeln!(out, "e {} {} {}", e.id, e.u, e.v).unwrap();
        }
        out
    }
}

fn number(tok: &str, line: usize, what: &str) -> Result<u32, ParseError> {
    tok.parse().map_err(|_| ParseError::Syntax {
        line,
        message: format!("expected {what}, found `{tok}`"),
    })
}

/// Parses the line format, checking identifiers as it goes so that errors
/// carry the offending line.
pub fn parse_document(text: &str) -> Result<GraphDocument, ParseError> {
    let mut doc = GraphDocument {
        name: default_name(),
        vertex_count: None,
        vertices: None,
        edges: vec![],
    };
    let mut known: Option<BTreeSet<u32>> = None;
    let mut seen_edges = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let syntax = |message: String| ParseError::Syntax { line, message };
        match toks[0] {
            "graph" => {
                if toks.len() != 2 {
                    return Err(syntax("expected `graph <name>`".into()));
                }
                doc.name = toks[1].to_string();
            }
            "v" | "vl" if known.is_some() => return Err(syntax("vertices declared twice".into())),
            "v" => {
                if toks.len() != 2 {
                    return Err(syntax("expected `v <count>`".into()));
                }
                let n = number(toks[1], line, "a vertex count")?;
                doc.vertex_count = Some(n);
                known = Some((1..=n).collect());
            }
            "vl" => {
                let mut set = BTreeSet::new();
                let mut list = vec![];
                for t in &toks[1..] {
                    let v = number(t, line, "a vertex identifier")?;
                    if !set.insert(v) {
                        return Err(syntax(format!("duplicate vertex identifier {v}")));
                    }
                    list.push(v);
                }
                doc.vertices = Some(list);
                known = Some(set);
            }
            "e" => {
                if toks.len() != 4 {
                    return Err(syntax("expected `e <id> <u> <v>`".into()));
                }
                let Some(vs) = &known else {
                    return Err(syntax("edge before vertex declaration".into()));
                };
                let id = number(toks[1], line, "an edge identifier")?;
                let u = number(toks[2], line, "a vertex identifier")?;
                let v = number(toks[3], line, "a vertex identifier")?;
                if let Some(bad) = [u, v].into_iter().find(|x| !vs.contains(x)) {
                    return Err(syntax(format!(
                        "dangling endpoint: edge {id} refers to unknown vertex {bad}"
                    )));
                }
                if !seen_edges.insert(id) {
                    return Err(syntax(format!("duplicate edge identifier {id}")));
                }
                doc.edges.push(EdgeRecord { id, u, v });
            }
            other => return Err(syntax(format!("unknown record `{other}`"))),
        }
    }
    Ok(doc)
}

/// Reads either format; JSON is recognised by a leading `{`.
pub fn parse_graph(text: &str) -> Result<(String, Multigraph), ParseError> {
    let doc = if text.trim_start().starts_with('{') {
        serde_json::from_str::<GraphDocument>(text).map_err(|e| ParseError::Json(e.to_string()))?
    } else {
        parse_document(text)?
    };
    let g = doc.to_graph()?;
    Ok((doc.name, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4: &str = "graph k4\nv 4\ne 1 1 2\ne 2 1 3\ne 3 1 4\ne 4 2 3\ne 5 2 4\ne 6 3 4\n";

    #[test]
    fn parses_k4() {
        let (name, g) = parse_graph(K4).unwrap();
        assert_eq!(name, "k4");
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 6));
    }

    #[test]
    fn digon_accepted() {
        let (_, g) = parse_graph("v 2\ne 1 1 2\ne 2 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_simple());
    }

    #[test]
    fn dangling_names_line_and_vertex() {
        let err = parse_graph("graph bad\nv 2\ne 1 1 9\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 3"), "{msg}");
        assert!(msg.contains('9'), "{msg}");
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = parse_graph("v 2\ne 1 1 2\ne 1 2 1\n").unwrap_err();
        assert!(err.to_string().contains("line 3"));
    }

    #[test]
    fn comments_and_vertex_lists() {
        let (_, g) = parse_graph("# a path\nvl 10 20 30\ne 5 10 20 # first\ne 7 30 20\n").unwrap();
        assert_eq!(g.vertices(), &[VertexId(10), VertexId(20), VertexId(30)]);
        let doc = GraphDocument::from_graph("p", &g);
        assert_eq!(doc.to_text(), "graph p\nvl 10 20 30\ne 5 10 20\ne 7 20 30\n");
    }

    #[test]
    fn round_trips() {
        let (name, g) = parse_graph(K4).unwrap();
        let text = GraphDocument::from_graph(&name, &g).to_text();
        assert_eq!(text, K4);
        let json = serde_json::to_string(&GraphDocument::from_graph(&name, &g)).unwrap();
        let (_, h) = parse_graph(&json).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn syntax_errors() {
        assert!(parse_graph("v x\n").unwrap_err().to_string().contains("line 1"));
        assert!(parse_graph("e 1 1 2\n").is_err());
        assert!(parse_graph("v 2\nfoo\n").is_err());
        assert!(parse_graph("{\"edges\": 3}").is_err());
    }
}
