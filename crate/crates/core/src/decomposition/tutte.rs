//! Tutte decomposition of a 2-connected multigraph, realised as the split
//! decomposition into bonds, cycles and 3-connected skeletons.
//!
//! Skeletons are split until each is a bond, a triangle or 3-connected;
//! adjacent cycles and adjacent bonds are then merged. The result does not
//! depend on the order of the splits, so it commutes with relabelling.

use std::collections::{BTreeMap, BTreeSet};

use super::blocks::{articulation_points, check_two_connected};
use super::treedec::TreeDecomposition;
use crate::embedding::Embedding;
use crate::error::{invariant, Error, Result};
use crate::graph::{Edge, EdgeId, EdgeSet, Multigraph, UnionFind, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartKind {
    CyclePart,
    ThreeConnectedPart,
    BondPart,
    EdgePart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Real(usize),
    Virtual(usize),
}

#[derive(Debug, Clone, Copy)]
struct SkEdge {
    a: usize,
    b: usize,
    label: Label,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteNode {
    pub kind: PartKind,
    pub bag: BTreeSet<VertexId>,
    /// Host edges assigned to this node.
    pub real_edges: EdgeSet,
    /// Incident tree edges; each contributes one virtual edge to the torso.
    pub virtual_edges: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TutteTreeEdge {
    pub nodes: (usize, usize),
    /// The adhesion set, smaller vertex first.
    pub pair: (VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteDecomposition {
    pub nodes: Vec<TutteNode>,
    pub tree_edges: Vec<TutteTreeEdge>,
}

impl TutteDecomposition {
    pub fn tree_decomposition(&self) -> TreeDecomposition {
        TreeDecomposition::new(
            self.nodes.iter().map(|n| n.bag.clone()).collect(),
            self.tree_edges.iter().map(|t| t.nodes).collect(),
        )
    }

    /// Distinct adhesion sets, sorted.
    pub fn adhesion_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let set: BTreeSet<_> = self.tree_edges.iter().map(|t| t.pair).collect();
        set.into_iter().collect()
    }

    pub fn count(&self, kind: PartKind) -> usize {
        self.nodes.iter().filter(|n| n.kind == kind).count()
    }
}

/// A torso: the node's real edges plus one virtual edge per incident tree
/// edge. Virtual edges get identifiers above every host identifier.
#[derive(Debug, Clone)]
pub struct Torso {
    pub graph: Multigraph,
    /// Virtual edge identifier to tree edge index.
    pub virtual_edges: BTreeMap<EdgeId, usize>,
}

pub fn torso(g: &Multigraph, td: &TutteDecomposition, t: usize) -> Torso {
    let node = &td.nodes[t];
    let base = g.max_edge_id().map_or(0, |e| e.0 + 1);
    let mut edges: Vec<(EdgeId, VertexId, VertexId)> = node
        .real_edges
        .iter()
        .map(|e| {
            let edge = g.edge(e).expect("real edge of host");
            (edge.id, edge.u, edge.v)
        })
        .collect();
    let mut virtual_edges = BTreeMap::new();
    for &k in &node.virtual_edges {
        let id = EdgeId(base + k as u32);
        let (x, y) = td.tree_edges[k].pair;
        edges.push((id, x, y));
        virtual_edges.insert(id, k);
    }
    let graph = Multigraph::new(node.bag.iter().copied(), edges).expect("torso is well formed");
    Torso { graph, virtual_edges }
}

fn pair_key(e: &SkEdge) -> (usize, usize) {
    (e.a.min(e.b), e.a.max(e.b))
}

fn skeleton_vertices(sk: &[SkEdge]) -> Vec<usize> {
    let set: BTreeSet<usize> = sk.iter().flat_map(|e| [e.a, e.b]).collect();
    set.into_iter().collect()
}

/// A separation pair `(a, b)` of a simple 2-connected skeleton, as host
/// vertex indices, or `None` if the skeleton is 3-connected.
fn separation_pair(sk: &[SkEdge]) -> Option<(usize, usize)> {
    let verts = skeleton_vertices(sk);
    let local: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = verts.len();
    for a in 0..n {
        let re = |v: usize| if v < a { v } else { v - 1 };
        let sub: Vec<(usize, usize)> = sk
            .iter()
            .map(|e| (local[&e.a], local[&e.b]))
            .filter(|&(x, y)| x != a && y != a)
            .map(|(x, y)| (re(x), re(y)))
            .collect();
        if let Some(&b) = articulation_points(n - 1, &sub).first() {
            let b = if b < a { b } else { b + 1 };
            return Some((verts[a], verts[b]));
        }
    }
    None
}

enum Step {
    Final,
    Split(Vec<SkEdge>, Vec<SkEdge>),
}

fn split_step(sk: &[SkEdge], next_virtual: &mut usize) -> Step {
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, e) in sk.iter().enumerate() {
        classes.entry(pair_key(e)).or_default().push(i);
    }
    if classes.len() == 1 {
        return Step::Final;
    }
    if let Some((&(x, y), class)) = classes.iter().find(|(_, c)| c.len() >= 2) {
        let v = *next_virtual;
        *next_virtual += 1;
        let virt = SkEdge {
            a: x,
            b: y,
            label: Label::Virtual(v),
        };
        let mut bond: Vec<SkEdge> = class.iter().map(|&i| sk[i]).collect();
        bond.push(virt);
        let mut rest: Vec<SkEdge> = sk
            .iter()
            .enumerate()
            .filter(|(i, _)| !class.contains(i))
            .map(|(_, e)| *e)
            .collect();
        rest.push(virt);
        return Step::Split(bond, rest);
    }
    if skeleton_vertices(sk).len() <= 3 {
        return Step::Final;
    }
    let Some((a, b)) = separation_pair(sk) else {
        return Step::Final;
    };
    // Component of the skeleton minus {a, b} containing its smallest vertex.
    let verts = skeleton_vertices(sk);
    let local: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(verts.len());
    for e in sk {
        if ![e.a, e.b].iter().any(|&v| v == a || v == b) {
            uf.union(local[&e.a], local[&e.b]);
        }
    }
    let seed = *verts
        .iter()
        .find(|&&v| v != a && v != b)
        .expect("at least four vertices");
    let root = uf.find(local[&seed]);
    let mut in_comp = |v: usize| v != a && v != b && uf.find(local[&v]) == root;
    let (mut one, mut two): (Vec<SkEdge>, Vec<SkEdge>) = (vec![], vec![]);
    for e in sk {
        if in_comp(e.a) || in_comp(e.b) {
            one.push(*e);
        } else {
            two.push(*e);
        }
    }
    let v = *next_virtual;
    *next_virtual += 1;
    let virt = SkEdge {
        a,
        b,
        label: Label::Virtual(v),
    };
    one.push(virt);
    two.push(virt);
    Step::Split(one, two)
}

fn classify(sk: &[SkEdge]) -> PartKind {
    let n = skeleton_vertices(sk).len();
    match (n, sk.len()) {
        (2, 1) => PartKind::EdgePart,
        (2, 2) => PartKind::CyclePart,
        (2, _) => PartKind::BondPart,
        (n, m) if n == m => PartKind::CyclePart,
        _ => PartKind::ThreeConnectedPart,
    }
}

/// Tutte decomposition of a 2-connected multigraph. Single edges and digons
/// give a single node.
pub fn tutte_decomposition(b: &Multigraph) -> Result<TutteDecomposition> {
    check_two_connected(b)?;
    if b.edge_count() == 0 {
        return Err(Error::NotTwoConnected(None));
    }
    let initial: Vec<SkEdge> = (0..b.edge_count())
        .map(|ei| {
            let (a, c) = b.ends(ei);
            SkEdge {
                a,
                b: c,
                label: Label::Real(ei),
            }
        })
        .collect();
    let mut next_virtual = 0usize;
    let mut work = vec![initial];
    let mut done: Vec<Vec<SkEdge>> = vec![];
    while let Some(sk) = work.pop() {
        match split_step(&sk, &mut next_virtual) {
            Step::Final => done.push(sk),
            Step::Split(x, y) => {
                work.push(y);
                work.push(x);
            }
        }
    }

    // Merge adjacent cycles and adjacent bonds.
    let kinds: Vec<PartKind> = done.iter().map(|s| classify(s)).collect();
    let mut holders: Vec<Vec<usize>> = vec![vec![]; next_virtual];
    for (i, sk) in done.iter().enumerate() {
        for e in sk {
            if let Label::Virtual(v) = e.label {
                holders[v].push(i);
            }
        }
    }
    if holders.iter().any(|h| h.len() != 2) {
        return Err(invariant!("virtual edge not shared by exactly two skeletons"));
    }
    let mut uf = UnionFind::new(done.len());
    let mut absorbed = vec![false; next_virtual];
    for (v, h) in holders.iter().enumerate() {
        let (s, t) = (h[0], h[1]);
        let mergeable = kinds[s] == kinds[t] && matches!(kinds[s], PartKind::CyclePart | PartKind::BondPart);
        if mergeable {
            uf.union(s, t);
            absorbed[v] = true;
        }
    }
    let mut groups: BTreeMap<usize, Vec<SkEdge>> = BTreeMap::new();
    for (i, sk) in done.iter().enumerate() {
        let r = uf.find(i);
        let entry = groups.entry(r).or_default();
        for e in sk {
            match e.label {
                Label::Virtual(v) if absorbed[v] => {}
                _ => entry.push(*e),
            }
        }
    }
    let mut merged: Vec<Vec<SkEdge>> = groups.into_values().collect();
    // Canonical node order: by bag, then kind.
    let key = |sk: &Vec<SkEdge>| {
        let bag: Vec<VertexId> = skeleton_vertices(sk).into_iter().map(|v| b.vertices()[v]).collect();
        (bag, classify(sk))
    };
    merged.sort_by_key(key);
    let mut owners: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (t, sk) in merged.iter().enumerate() {
        for e in sk {
            if let Label::Virtual(v) = e.label {
                owners.entry(v).or_default().push(t);
            }
        }
    }
    let mut raw_edges: Vec<(TutteTreeEdge, usize)> = owners
        .iter()
        .map(|(&v, ts)| {
            let sk_edge = merged[ts[0]].iter().find(|e| e.label == Label::Virtual(v)).unwrap();
            let (x, y) = (b.vertices()[sk_edge.a], b.vertices()[sk_edge.b]);
            let tree_edge = TutteTreeEdge {
                nodes: (ts[0].min(ts[1]), ts[0].max(ts[1])),
                pair: (x.min(y), x.max(y)),
            };
            (tree_edge, v)
        })
        .collect();
    raw_edges.sort_by_key(|(t, _)| (t.nodes, t.pair));
    let index_of: BTreeMap<usize, usize> = raw_edges.iter().enumerate().map(|(k, (_, v))| (*v, k)).collect();
    let nodes: Vec<TutteNode> = merged
        .iter()
        .map(|sk| {
            let mut virtual_edges: Vec<usize> = sk
                .iter()
                .filter_map(|e| match e.label {
                    Label::Virtual(v) => Some(index_of[&v]),
                    Label::Real(_) => None,
                })
                .collect();
            virtual_edges.sort_unstable();
            TutteNode {
                kind: classify(sk),
                bag: skeleton_vertices(sk).into_iter().map(|v| b.vertices()[v]).collect(),
                real_edges: sk
                    .iter()
                    .filter_map(|e| match e.label {
                        Label::Real(ei) => Some(b.edges()[ei].id),
                        Label::Virtual(_) => None,
                    })
                    .collect(),
                virtual_edges,
            }
        })
        .collect();
    Ok(TutteDecomposition {
        nodes,
        tree_edges: raw_edges.into_iter().map(|(t, _)| t).collect(),
    })
}

/// Adds one new edge per adhesion set whose vertices are not adjacent in
/// `g`, numbering them upwards from `first_id`. The result is checked to be
/// planar.
pub fn complete_adhesions(
    g: &Multigraph,
    td: &TutteDecomposition,
    first_id: EdgeId,
) -> Result<(Multigraph, Vec<Edge>)> {
    let mut added = Vec::new();
    let mut next = first_id.0;
    for (x, y) in td.adhesion_pairs() {
        if g.edges_between(x, y).is_empty() {
            added.push(Edge::new(EdgeId(next), x, y));
            next += 1;
        }
    }
    let g_prime = g.with_edges(&added)?;
    if !added.is_empty() {
        match Embedding::planar(&g_prime) {
            Ok(_) => {}
            Err(Error::NonPlanar) => {
                return Err(match Embedding::planar(g) {
                    Err(Error::NonPlanar) => Error::NonPlanar,
                    _ => invariant!("completing the adhesion sets destroyed planarity"),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok((g_prime, added))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{check_td_axioms, is_three_connected};
    use crate::fixtures;
    use crate::oracle::{is_cycle_graph, is_k_connected_brute};

    fn check(g: &Multigraph) -> TutteDecomposition {
        let td = tutte_decomposition(g).unwrap();
        assert_eq!(check_td_axioms(g, &td.tree_decomposition(), Some(2)), Ok(()));
        for t in 0..td.nodes.len() {
            let tor = torso(g, &td, t).graph;
            match td.nodes[t].kind {
                PartKind::ThreeConnectedPart => assert!(is_k_connected_brute(&tor, 3)),
                PartKind::CyclePart => assert!(is_cycle_graph(&tor)),
                PartKind::BondPart => assert!(tor.vertex_count() == 2 && tor.edge_count() >= 3),
                PartKind::EdgePart => assert_eq!(tor.edge_count(), 1),
            }
        }
        let real: usize = td.nodes.iter().map(|n| n.real_edges.len()).sum();
        assert_eq!(real, g.edge_count());
        td
    }

    #[test]
    fn k4_single_rigid_node() {
        let td = check(&fixtures::k4());
        assert_eq!(td.nodes.len(), 1);
        assert_eq!(td.nodes[0].kind, PartKind::ThreeConnectedPart);
        assert_eq!(torso(&fixtures::k4(), &td, 0).graph, fixtures::k4());
    }

    #[test]
    fn cycles_stay_whole() {
        for n in 3..8 {
            let td = check(&fixtures::cycle(n));
            assert_eq!(td.nodes.len(), 1);
            assert_eq!(td.nodes[0].kind, PartKind::CyclePart);
        }
    }

    #[test]
    fn degenerate_blocks() {
        let td = check(&fixtures::path(2));
        assert_eq!(td.nodes[0].kind, PartKind::EdgePart);
        let td = check(&fixtures::digon());
        assert_eq!(td.nodes[0].kind, PartKind::CyclePart);
        let triple = Multigraph::from_pairs(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(check(&triple).nodes[0].kind, PartKind::BondPart);
    }

    #[test]
    fn two_hub_graph_is_one_bond_and_four_cycles() {
        let g = fixtures::two_hub_paths(4);
        let td = check(&g);
        assert_eq!(td.count(PartKind::BondPart), 1);
        assert_eq!(td.count(PartKind::CyclePart), 4);
        assert_eq!(td.nodes.len(), 5);
        let bond = td.nodes.iter().position(|n| n.kind == PartKind::BondPart).unwrap();
        let t = torso(&g, &td, bond);
        assert_eq!(
            (t.graph.vertex_count(), t.graph.edge_count(), t.virtual_edges.len()),
            (2, 4, 4)
        );
        for (i, n) in td
            .nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| n.kind == PartKind::CyclePart)
        {
            assert_eq!(n.bag.len(), 3);
            let t = torso(&g, &td, i);
            assert_eq!((t.graph.edge_count(), t.virtual_edges.len()), (3, 1));
        }
        assert_eq!(td.adhesion_pairs(), vec![(VertexId(1), VertexId(2))]);
    }

    #[test]
    fn completion() {
        let g = fixtures::two_hub_paths(4);
        let td = tutte_decomposition(&g).unwrap();
        let (gp, added) = complete_adhesions(&g, &td, EdgeId(9)).unwrap();
        assert_eq!(added.len(), 1);
        assert_eq!(gp.edge_count(), 9);
        let td = tutte_decomposition(&fixtures::k4()).unwrap();
        assert!(complete_adhesions(&fixtures::k4(), &td, EdgeId(7))
            .unwrap()
            .1
            .is_empty());
        let theta = fixtures::theta();
        let td = tutte_decomposition(&theta).unwrap();
        assert_eq!(complete_adhesions(&theta, &td, EdgeId(7)).unwrap().1.len(), 1);
    }

    #[test]
    fn existing_edge_blocks_completion() {
        // Theta graph plus the hub edge: the bond keeps a real edge.
        let g = Multigraph::from_pairs(5, &[(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2), (1, 2)]).unwrap();
        let td = check(&g);
        let bond = td.nodes.iter().find(|n| n.kind == PartKind::BondPart).unwrap();
        assert_eq!(bond.real_edges.len(), 1);
        assert!(complete_adhesions(&g, &td, EdgeId(8)).unwrap().1.is_empty());
    }

    #[test]
    fn random_blocks_pass_axioms() {
        for seed in 0..20 {
            let g = fixtures::random_two_connected_planar(6 + seed as u32 % 8, seed);
            let td = check(&g);
            // Adhesion sets separate the block.
            for (x, y) in td.adhesion_pairs() {
                let rest = g.without_vertices(&[x, y].into_iter().collect());
                if td.nodes.len() > 1 {
                    assert!(!crate::graph::is_connected(&rest) || !g.edges_between(x, y).is_empty());
                }
            }
        }
    }

    #[test]
    fn rigid_parts_of_triangulations() {
        for seed in 0..5 {
            let g = fixtures::random_triangulation(10, seed);
            assert!(is_three_connected(&g));
            let td = check(&g);
            assert_eq!(td.nodes.len(), 1);
        }
    }

    #[test]
    fn rejects_cut_vertex() {
        assert_eq!(
            tutte_decomposition(&fixtures::bowtie()),
            Err(Error::NotTwoConnected(Some(VertexId(3))))
        );
    }
}
