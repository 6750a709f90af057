//! Tree-decompositions and their axioms.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{EdgeId, Multigraph, UnionFind, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<BTreeSet<VertexId>>,
    /// Edges of the decomposition tree, as pairs of bag indices.
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<BTreeSet<VertexId>>, tree_edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition { bags, tree_edges }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Intersection of the two bags joined by tree edge `k`.
    pub fn adhesion(&self, k: usize) -> BTreeSet<VertexId> {
        let (s, t) = self.tree_edges[k];
        self.bags[s].intersection(&self.bags[t]).copied().collect()
    }

    fn is_tree(&self) -> bool {
        let n = self.bags.len();
        if n == 0 || self.tree_edges.len() + 1 != n {
            return false;
        }
        let mut uf = UnionFind::new(n);
        self.tree_edges.iter().all(|&(s, t)| s < n && t < n && uf.union(s, t))
    }

    /// Tree path from `s` to `t`, both included.
    fn path(&self, s: usize, t: usize) -> Vec<usize> {
        let n = self.bags.len();
        let mut adj = vec![vec![]; n];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut out = vec![t];
        let mut cur = t;
        while cur != s {
            cur = parent[cur];
            out.push(cur);
        }
        out.reverse();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotATree,
    ForeignVertex {
        node: usize,
        vertex: VertexId,
    },
    /// (T1): a host vertex lies in no bag.
    MissingVertex(VertexId),
    /// (T2): no bag contains both ends of the edge.
    UncoveredEdge(EdgeId),
    /// (T3): `vertex` is in the bags of `t1` and `t3` but not in that of
    /// `t2`, which lies between them.
    Disconnected {
        t1: usize,
        t2: usize,
        t3: usize,
        vertex: VertexId,
    },
    AdhesionTooLarge {
        tree_edge: usize,
        size: usize,
    },
}

/// Checks tree-ness and (T1)–(T3), then adhesion sizes if a bound is given.
/// Reports the first violation found.
pub fn check_td_axioms(g: &Multigraph, td: &TreeDecomposition, max_adhesion: Option<usize>) -> Result<(), Violation> {
    if !td.is_tree() {
        return Err(Violation::NotATree);
    }
    for (node, bag) in td.bags.iter().enumerate() {
        if let Some(&vertex) = bag.iter().find(|v| !g.has_vertex(**v)) {
            return Err(Violation::ForeignVertex { node, vertex });
        }
    }
    for &v in g.vertices() {
        if !td.bags.iter().any(|b| b.contains(&v)) {
            return Err(Violation::MissingVertex(v));
        }
    }
    for e in g.edges() {
        if !td.bags.iter().any(|b| b.contains(&e.u) && b.contains(&e.v)) {
            return Err(Violation::UncoveredEdge(e.id));
        }
    }
    for &v in g.vertices() {
        let holders: Vec<usize> = (0..td.bags.len()).filter(|&t| td.bags[t].contains(&v)).collect();
        for (i, &t1) in holders.iter().enumerate() {
            for &t3 in &holders[i + 1..] {
                let path = td.path(t1, t3);
                if let Some(&t2) = path.iter().find(|&&t| !td.bags[t].contains(&v)) {
                    return Err(Violation::Disconnected { t1, t2, t3, vertex: v });
                }
            }
        }
    }
    if let Some(limit) = max_adhesion {
        for k in 0..td.tree_edges.len() {
            let size = td.adhesion(k).len();
            if size > limit {
                return Err(Violation::AdhesionTooLarge { tree_edge: k, size });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn bag(vs: &[u32]) -> BTreeSet<VertexId> {
        vs.iter().map(|&v| VertexId(v)).collect()
    }

    #[test]
    fn trivial_decomposition_is_valid() {
        let g = fixtures::k4();
        let td = TreeDecomposition::new(vec![bag(&[1, 2, 3, 4])], vec![]);
        assert_eq!(check_td_axioms(&g, &td, Some(2)), Ok(()));
    }

    #[test]
    fn emptied_bag_misses_vertex() {
        let g = fixtures::path(3);
        let td = TreeDecomposition::new(vec![bag(&[1, 2]), bag(&[])], vec![(0, 1)]);
        assert_eq!(
            check_td_axioms(&g, &td, None),
            Err(Violation::MissingVertex(VertexId(3)))
        );
    }

    #[test]
    fn t3_witness() {
        // a=1 b=2 c=3 d=4
        let g = Multigraph::from_pairs(4, &[(1, 2), (3, 4), (1, 4)]).unwrap();
        let td = TreeDecomposition::new(vec![bag(&[1, 2]), bag(&[3, 4]), bag(&[1, 4])], vec![(0, 1), (1, 2)]);
        assert_eq!(
            check_td_axioms(&g, &td, None),
            Err(Violation::Disconnected {
                t1: 0,
                t2: 1,
                t3: 2,
                vertex: VertexId(1)
            })
        );
    }

    #[test]
    fn uncovered_edge_and_non_tree() {
        let g = fixtures::cycle(3);
        let td = TreeDecomposition::new(vec![bag(&[1, 2]), bag(&[2, 3])], vec![(0, 1)]);
        assert_eq!(
            check_td_axioms(&g, &td, None),
            Err(Violation::UncoveredEdge(crate::graph::EdgeId(3)))
        );
        let cyc = TreeDecomposition::new(
            vec![bag(&[1, 2, 3]), bag(&[1]), bag(&[2])],
            vec![(0, 1), (1, 2), (2, 0)],
        );
        assert_eq!(check_td_axioms(&g, &cyc, None), Err(Violation::NotATree));
    }

    #[test]
    fn adhesion_bound() {
        let g = fixtures::k4();
        let td = TreeDecomposition::new(vec![bag(&[1, 2, 3, 4]), bag(&[1, 2, 3])], vec![(0, 1)]);
        assert_eq!(
            check_td_axioms(&g, &td, Some(2)),
            Err(Violation::AdhesionTooLarge { tree_edge: 0, size: 3 })
        );
    }
}
