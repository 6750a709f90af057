//! JSON reports and DOT export.

use std::fmt::Write as _;

use cyclenest::generator::{GeneratingSet, Verification};
use cyclenest::{EdgeSet, Multigraph};
use serde_json::{json, Value};

use crate::format::{EdgeRecord, GraphDocument};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
];

/// Undirected DOT graph. Each group is drawn as its own colour class; an
/// edge in several groups is drawn once per group, edges in none are grey.
pub fn dot(name: &str, g: &Multigraph, groups: &[(String, EdgeSet)]) -> String {
    let mut out = format!("graph \"{name}\" {{\n  node [shape=circle];\n");
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for e in g.edges() {
        if !groups.iter().any(|(_, f)| f.contains(e.id)) {
            writeln!(out, "  {} -- {} [label=\"{}\", color=gray];", e.u, e.v, e.id).unwrap();
        }
    }
    for (i, (label, f)) in groups.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        writeln!(out, "  // {label}").unwrap();
        for e in f.iter().filter_map(|e| g.edge(e)) {
            writeln!(
                out,
                "  {} -- {} [label=\"{}\", color=\"{colour}\", penwidth=2];",
                e.u, e.v, e.id
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// The schema-stable generating-set report.
pub fn generating_set(name: &str, d: &GeneratingSet, check: &Verification, aut_invariant: Option<bool>) -> Value {
    let generators: Vec<Value> = d
        .cycles
        .iter()
        .zip(&d.provenance)
        .map(|(c, p)| {
            json!({
                "edges": c.edges().iter().map(|e| e.0).collect::<Vec<_>>(),
                "vertices": c.vertices().iter().map(|v| v.0).collect::<Vec<_>>(),
                "length": c.len(),
                "block": p.block,
                "part": p.part,
                "kind": format!("{:?}", p.kind),
            })
        })
        .collect();
    let extension: Vec<EdgeRecord> = d
        .extension
        .iter()
        .map(|e| EdgeRecord {
            id: e.id.0,
            u: e.u.0,
            v: e.v.0,
        })
        .collect();
    json!({
        "host": GraphDocument::from_graph(name, &d.host),
        "extension_edges": extension,
        "generators": generators,
        "rank": check.rank,
        "dimension": check.dimension,
        "nested": check.nested.is_nested(),
        "aut_invariant": aut_invariant,
    })
}

pub fn generating_set_text(report: &Value) -> String {
    let gens = report["generators"].as_array().cloned().unwrap_or_default();
    let mut out = format!(
        "{}: {} generator(s), rank {} of {}, nested {}, aut-invariant {}\n",
        report["host"]["name"].as_str().unwrap_or(""),
        gens.len(),
        report["rank"],
        report["dimension"],
        report["nested"],
        report["aut_invariant"]
    );
    for e in report["extension_edges"].as_array().into_iter().flatten() {
        writeln!(out, "  added edge e{} = {}-{}", e["id"], e["u"], e["v"]).unwrap();
    }
    for (i, g) in gens.iter().enumerate() {
        let vs: Vec<String> = g["vertices"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|v| v.to_string())
            .collect();
        let es: Vec<String> = g["edges"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|e| format!("e{e}"))
            .collect();
        writeln!(
            out,
            "  {i}: {} block {} part {} via {} [{}]",
            g["kind"].as_str().unwrap_or(""),
            g["block"],
            g["part"],
            vs.join("-"),
            es.join(" ")
        )
        .unwrap();
    }
    out
}
