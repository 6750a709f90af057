//! Exhaustive enumeration of circuits and tight cuts.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Cut, EdgeSet, Multigraph, UnionFind, VertexId};

/// Default cap on backtracking nodes.
pub const DEFAULT_SEARCH_BUDGET: u64 = 1 << 20;

/// All circuits of length at most `max_length` (all circuits for `None`),
/// each exactly once, ordered by length and then by edge set.
///
/// A circuit is found from its smallest edge `e0 = uv` as `e0` plus a simple
/// `v`–`u` path over larger edges, so no circuit is produced twice.
pub fn enumerate_circuits(g: &Multigraph, max_length: Option<usize>, budget: u64) -> Result<Vec<EdgeSet>> {
    let limit = max_length.unwrap_or(usize::MAX);
    let mut out: Vec<EdgeSet> = Vec::new();
    let mut nodes: u64 = 0;
    let n = g.vertex_count();
    for e0 in 0..g.edge_count() {
        let (u, v) = g.ends(e0);
        if u == v {
            if limit >= 1 {
                out.push([g.edges()[e0].id].into_iter().collect());
            }
            continue;
        }
        let mut on_path = vec![false; n];
        on_path[v] = true;
        let mut path: Vec<usize> = vec![e0];
        // frames: (vertex, position in its incidence list)
        let mut stack: Vec<(usize, usize)> = vec![(v, 0)];
        while let Some(frame) = stack.last_mut() {
            let (x, pos) = *frame;
            let inc = g.incident(x);
            if pos >= inc.len() {
                stack.pop();
                on_path[x] = false;
                path.pop();
                continue;
            }
            frame.1 += 1;
            let e = inc[pos];
            if e <= e0 {
                continue;
            }
            let y = g.opposite(e, x);
            if y == x {
                continue;
            }
            nodes += 1;
            if nodes > budget {
                return Err(Error::BudgetExceeded {
                    what: "circuit enumeration search nodes",
                    limit: budget,
                });
            }
            if y == u {
                if path.len() < limit {
                    let mut c: EdgeSet = path.iter().map(|&i| g.edges()[i].id).collect();
                    c.insert(g.edges()[e].id);
                    out.push(c);
                }
                continue;
            }
            if on_path[y] || path.len() + 1 >= limit {
                continue;
            }
            on_path[y] = true;
            path.push(e);
            stack.push((y, 0));
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// All tight cuts of a connected graph (bipartitions with both sides
/// connected), by enumerating vertex subsets. Each cut appears once, with
/// the first vertex on the X side.
pub fn enumerate_tight_cuts(g: &Multigraph, max_vertices: usize) -> Result<Vec<Cut>> {
    let n = g.vertex_count();
    if n > max_vertices || n > 30 {
        return Err(Error::BudgetExceeded {
            what: "tight-cut enumeration vertices",
            limit: max_vertices as u64,
        });
    }
    if n < 2 {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for rest in 0..(1u32 << (n - 1)) {
        let mask = 1 | (rest << 1);
        if mask == full {
            continue;
        }
        if side_connected(g, mask) && side_connected(g, full & !mask) {
            let side: BTreeSet<VertexId> = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| g.vertices()[i])
                .collect();
            out.push(Cut::from_side(g, side)?);
        }
    }
    Ok(out)
}

fn side_connected(g: &Multigraph, mask: u32) -> bool {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for ei in 0..g.edge_count() {
        let (a, b) = g.ends(ei);
        if mask >> a & 1 == 1 && mask >> b & 1 == 1 {
            uf.union(a, b);
        }
    }
    let mut root = None;
    for v in (0..n).filter(|&v| mask >> v & 1 == 1) {
        let r = uf.find(v);
        match root {
            None => root = Some(r),
            Some(r0) if r0 != r => return false,
            _ => {}
        }
    }
    true
}
