//! Blocks (maximal 2-connected subgraphs, bridges and loops) and the
//! block-cutvertex tree.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{is_connected, EdgeSet, Multigraph, VertexId};

/// Edge-index lists of the blocks of the graph given by `ends` on `n`
/// vertices. Every loop is a block of its own. Blocks are reported in DFS
/// completion order, which only depends on the input order.
pub(crate) fn biconnected_components(n: usize, ends: &[(usize, usize)]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut blocks = Vec::new();
    for (e, &(a, b)) in ends.iter().enumerate() {
        if a == b {
            blocks.push(vec![e]);
        } else {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
    }
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    // (vertex, edge to parent, next adjacency position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, pe, pos) = *frame;
            if pos < adj[v].len() {
                frame.2 += 1;
                let (w, e) = adj[v][pos];
                if e == pe {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Vertices whose removal disconnects their component (loops ignored).
pub(crate) fn articulation_points(n: usize, ends: &[(usize, usize)]) -> Vec<usize> {
    let mut count = vec![0usize; n];
    for block in biconnected_components(n, ends) {
        if block.len() == 1 && ends[block[0]].0 == ends[block[0]].1 {
            continue;
        }
        let vs: BTreeSet<usize> = block.iter().flat_map(|&e| [ends[e].0, ends[e].1]).collect();
        for v in vs {
            count[v] += 1;
        }
    }
    (0..n).filter(|&v| count[v] >= 2).collect()
}

fn index_ends(g: &Multigraph) -> Vec<(usize, usize)> {
    (0..g.edge_count()).map(|e| g.ends(e)).collect()
}

/// A separating set of at most two vertices, if one exists. Returns `None`
/// for 3-connected graphs; graphs with fewer than four vertices that have no
/// separator yield `Some(vec![])`.
pub fn small_separator(g: &Multigraph) -> Option<Vec<VertexId>> {
    if !is_connected(g) {
        return Some(vec![]);
    }
    let n = g.vertex_count();
    let ends = index_ends(g);
    if let Some(&a) = articulation_points(n, &ends).first() {
        return Some(vec![g.vertices()[a]]);
    }
    for a in 0..n {
        // G - a, reindexed.
        let map: Vec<usize> = (0..n).map(|v| if v < a { v } else { v.wrapping_sub(1) }).collect();
        let sub: Vec<(usize, usize)> = ends
            .iter()
            .filter(|&&(x, y)| x != a && y != a)
            .map(|&(x, y)| (map[x], map[y]))
            .collect();
        if let Some(&b) = articulation_points(n - 1, &sub).first() {
            let b = if b < a { b } else { b + 1 };
            let mut sep = vec![g.vertices()[a], g.vertices()[b]];
            sep.sort();
            return Some(sep);
        }
    }
    if n < 4 {
        return Some(vec![]);
    }
    None
}

/// Whether the graph is 3-connected: at least four vertices, connected, and
/// no separator of size at most two.
pub fn is_three_connected(g: &Multigraph) -> bool {
    small_separator(g).is_none()
}

/// Checks 2-connectivity in the multigraph sense used for blocks: connected,
/// loopless, and without cut vertex. Single edges and digons qualify.
pub fn check_two_connected(g: &Multigraph) -> Result<()> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    if let Some(e) = g.edges().iter().find(|e| e.is_loop()) {
        if g.edge_count() > 1 {
            return Err(Error::NotTwoConnected(Some(e.u)));
        }
    }
    let ends = index_ends(g);
    match articulation_points(g.vertex_count(), &ends).first() {
        Some(&a) => Err(Error::NotTwoConnected(Some(g.vertices()[a]))),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Loop,
    Bridge,
    /// At least two edges and no cut vertex (includes digons and bonds).
    TwoConnected,
}

#[derive(Debug, Clone)]
pub struct Block {
    pub graph: Multigraph,
    pub kind: BlockKind,
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Vertices lying in two or more blocks.
    pub cut_vertices: Vec<VertexId>,
    /// Incidences `(block index, cut vertex)` of the block-cutvertex tree
    /// (a forest for disconnected graphs).
    pub tree_edges: Vec<(usize, VertexId)>,
}

/// Splits a graph into its blocks. Every edge lies in exactly one block;
/// blocks are ordered by their smallest edge identifier.
pub fn block_decomposition(g: &Multigraph) -> BlockDecomposition {
    let ends = index_ends(g);
    let mut raw = biconnected_components(g.vertex_count(), &ends);
    raw.sort();
    let blocks: Vec<Block> = raw
        .iter()
        .map(|idx| {
            let f: EdgeSet = idx.iter().map(|&e| g.edges()[e].id).collect();
            let graph = g.edge_subgraph(&f).expect("block edges belong to host");
            let kind = if idx.len() == 1 && g.edges()[idx[0]].is_loop() {
                BlockKind::Loop
            } else if idx.len() == 1 {
                BlockKind::Bridge
            } else {
                BlockKind::TwoConnected
            };
            Block { graph, kind }
        })
        .collect();
    let mut count = std::collections::BTreeMap::<VertexId, usize>::new();
    for b in &blocks {
        for &v in b.graph.vertices() {
            *count.entry(v).or_default() += 1;
        }
    }
    let cut_vertices: Vec<VertexId> = count.iter().filter(|(_, &c)| c >= 2).map(|(&v, _)| v).collect();
    let mut tree_edges = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in b.graph.vertices() {
            if count[&v] >= 2 {
                tree_edges.push((i, v));
            }
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices,
        tree_edges,
    }
}
