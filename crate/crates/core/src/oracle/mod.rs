//! Brute-force ground truth used to check the constructive modules:
//! circuit and tight-cut enumeration, automorphism groups, GF(2) spans,
//! orbit closure, canonicity probes and the exhaustive embedding audit.
//!
//! Every search here has an explicit budget and refuses rather than samples.

mod audit;
mod automorphism;
mod canonicity;
mod circuits;
mod gf2;

use std::collections::BTreeSet;

use crate::graph::{is_connected, Multigraph, VertexId};

pub use audit::{counterexample_audit, AuditConfig, AuditOutcome, AuditReport, EmbeddingWitness};
pub use automorphism::{automorphism_group, orbit_closed, orbits, Automorphism, AutomorphismGroup};
pub use canonicity::{canonicity_probe, random_relabeling, Pipeline, ProbeOutcome};
pub use circuits::{enumerate_circuits, enumerate_tight_cuts, DEFAULT_SEARCH_BUDGET};
pub use gf2::{gf2_rank, in_span, Gf2Span};

/// `k`-connectivity by trying every vertex set of size below `k`.
pub fn is_k_connected_brute(g: &Multigraph, k: usize) -> bool {
    let n = g.vertex_count();
    if n <= k || !is_connected(g) {
        return false;
    }
    let vs = g.vertices();
    let mut subset: Vec<usize> = Vec::new();
    fn rec(g: &Multigraph, vs: &[VertexId], start: usize, left: usize, subset: &mut Vec<usize>) -> bool {
        if !subset.is_empty() {
            let removed: BTreeSet<VertexId> = subset.iter().map(|&i| vs[i]).collect();
            if !is_connected(&g.without_vertices(&removed)) {
                return false;
            }
        }
        if left == 0 {
            return true;
        }
        for i in start..vs.len() {
            subset.push(i);
            let ok = rec(g, vs, i + 1, left - 1, subset);
            subset.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    rec(g, vs, 0, k - 1, &mut subset)
}

/// Connected and every vertex of degree two (loops count twice).
pub fn is_cycle_graph(g: &Multigraph) -> bool {
    g.edge_count() > 0 && is_connected(g) && (0..g.vertex_count()).all(|v| g.degree(v) == 2)
}
