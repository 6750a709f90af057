//! Finite multigraphs with identity-carrying edges, and the GF(2) algebra of
//! edge sets over them.
//!
//! Vertices and edges are addressed by opaque identifiers ([`VertexId`],
//! [`EdgeId`]). Internally a [`Multigraph`] keeps both sorted by identifier so
//! that dense indices (`0..n`, `0..m`) are a deterministic function of the
//! identifiers alone. Loops and parallel edges are allowed everywhere.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge record. Endpoints are stored with `u <= v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(id: EdgeId, a: VertexId, b: VertexId) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        Edge { id, u, v }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone)]
pub struct Multigraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    vertex_pos: HashMap<VertexId, usize>,
    edge_pos: HashMap<EdgeId, usize>,
    /// Endpoint indices per edge index, `(u, v)` with `u <= v`.
    ends: Vec<(usize, usize)>,
    /// Incident edge indices per vertex index; a loop is listed twice.
    incidence: Vec<Vec<usize>>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .finish()
    }
}

impl PartialEq for Multigraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Multigraph {}

impl Multigraph {
    /// Builds a multigraph, rejecting duplicate identifiers and edges whose
    /// endpoints are not listed.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (EdgeId, VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut vs: Vec<VertexId> = vertices.into_iter().collect();
        vs.sort_unstable();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        let vset: BTreeSet<VertexId> = vs.iter().copied().collect();
        let mut es = Vec::new();
        let mut seen = BTreeSet::new();
        for (id, a, b) in edges {
            if !seen.insert(id) {
                return Err(Error::DuplicateEdge(id));
            }
            for x in [a, b] {
                if !vset.contains(&x) {
                    return Err(Error::DanglingEndpoint { edge: id, vertex: x });
                }
            }
            es.push(Edge::new(id, a, b));
        }
        es.sort_unstable();
        Ok(Self::from_sorted(vs, es))
    }

    fn from_sorted(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Self {
        let vertex_pos: HashMap<_, _> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edge_pos: HashMap<_, _> = edges.iter().enumerate().map(|(i, e)| (e.id, i)).collect();
        let mut incidence = vec![Vec::new(); vertices.len()];
        let mut ends = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            let (a, b) = (vertex_pos[&e.u], vertex_pos[&e.v]);
            ends.push((a, b));
            incidence[a].push(i);
            incidence[b].push(i);
        }
        Multigraph {
            vertices,
            edges,
            vertex_pos,
            edge_pos,
            ends,
            incidence,
        }
    }

    /// Vertices `1..=n` and the given edges, numbered `1..` in order.
    pub fn from_pairs(n: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        Self::new(
            (1..=n).map(VertexId),
            pairs
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| (EdgeId(i as u32 + 1), VertexId(a), VertexId(b))),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.vertex_pos.get(&v).copied()
    }

    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        self.edge_pos.get(&e).copied()
    }

    pub fn edge(&self, e: EdgeId) -> Option<&Edge> {
        self.edge_index(e).map(|i| &self.edges[i])
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertex_pos.contains_key(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edge_pos.contains_key(&e)
    }

    /// Endpoint indices of the edge with index `ei`.
    pub fn ends(&self, ei: usize) -> (usize, usize) {
        self.ends[ei]
    }

    /// Incident edge indices of the vertex with index `vi` (loops twice).
    pub fn incident(&self, vi: usize) -> &[usize] {
        &self.incidence[vi]
    }

    pub fn degree(&self, vi: usize) -> usize {
        self.incidence[vi].len()
    }

    /// The endpoint of edge `ei` opposite to vertex index `vi`.
    pub fn opposite(&self, ei: usize, vi: usize) -> usize {
        let (a, b) = self.ends[ei];
        if a == vi {
            b
        } else {
            a
        }
    }

    pub fn max_edge_id(&self) -> Option<EdgeId> {
        self.edges.iter().map(|e| e.id).max()
    }

    pub fn edges_between(&self, a: VertexId, b: VertexId) -> Vec<EdgeId> {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.edges.iter().filter(|e| (e.u, e.v) == key).map(|e| e.id).collect()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn is_simple(&self) -> bool {
        let mut pairs = BTreeSet::new();
        self.edges.iter().all(|e| !e.is_loop() && pairs.insert((e.u, e.v)))
    }

    /// Every edge set of this graph is over its edges.
    pub fn check_edges(&self, f: &EdgeSet) -> Result<()> {
        match f.iter().find(|e| !self.has_edge(*e)) {
            Some(e) => Err(Error::ForeignEdge(e)),
            None => Ok(()),
        }
    }

    /// Sum in the edge space of this graph; both operands must be over it.
    pub fn sum(&self, a: &EdgeSet, b: &EdgeSet) -> Result<EdgeSet> {
        self.check_edges(a)?;
        self.check_edges(b)?;
        Ok(a.sum(b))
    }

    pub fn all_edges(&self) -> EdgeSet {
        self.edges.iter().map(|e| e.id).collect()
    }

    /// Edge indices of the members of `f`, ignoring foreign identifiers.
    pub fn edge_indices(&self, f: &EdgeSet) -> Vec<usize> {
        f.iter().filter_map(|e| self.edge_index(e)).collect()
    }

    /// The graph with the given extra edges appended.
    pub fn with_edges(&self, extra: &[Edge]) -> Result<Multigraph> {
        Multigraph::new(
            self.vertices.iter().copied(),
            self.edges.iter().chain(extra).map(|e| (e.id, e.u, e.v)),
        )
    }

    /// Subgraph on the given edges and the vertices they touch.
    pub fn edge_subgraph(&self, f: &EdgeSet) -> Result<Multigraph> {
        self.check_edges(f)?;
        let es: Vec<Edge> = f.iter().map(|e| *self.edge(e).unwrap()).collect();
        let vs: BTreeSet<VertexId> = es.iter().flat_map(|e| [e.u, e.v]).collect();
        Multigraph::new(vs, es.iter().map(|e| (e.id, e.u, e.v)))
    }

    /// Subgraph induced by a vertex set.
    pub fn induced_subgraph(&self, vs: &BTreeSet<VertexId>) -> Multigraph {
        let verts: Vec<VertexId> = self.vertices.iter().copied().filter(|v| vs.contains(v)).collect();
        let es: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| vs.contains(&e.u) && vs.contains(&e.v))
            .copied()
            .collect();
        Self::from_sorted(verts, es)
    }

    /// Graph with the given vertices (and their incident edges) deleted.
    pub fn without_vertices(&self, removed: &BTreeSet<VertexId>) -> Multigraph {
        let keep: BTreeSet<VertexId> = self.vertices.iter().copied().filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Graph with the given edges deleted; all vertices kept.
    pub fn without_edges(&self, removed: &EdgeSet) -> Multigraph {
        let es: Vec<Edge> = self.edges.iter().filter(|e| !removed.contains(e.id)).copied().collect();
        Self::from_sorted(self.vertices.clone(), es)
    }

    pub fn relabel(&self, r: &Relabeling) -> Result<Multigraph> {
        let vs = self
            .vertices
            .iter()
            .map(|&v| r.vertex(v).ok_or(Error::ForeignVertex(v)))
            .collect::<Result<Vec<_>>>()?;
        let es = self
            .edges
            .iter()
            .map(|e| {
                let id = r.edge(e.id).ok_or(Error::ForeignEdge(e.id))?;
                Ok((id, r.vertex(e.u).unwrap(), r.vertex(e.v).unwrap()))
            })
            .collect::<Result<Vec<_>>>()?;
        Multigraph::new(vs, es)
    }
}

/// A bijective renaming of vertex and edge identifiers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Relabeling {
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub edges: BTreeMap<EdgeId, EdgeId>,
}

impl Relabeling {
    pub fn identity(g: &Multigraph) -> Self {
        Relabeling {
            vertices: g.vertices().iter().map(|&v| (v, v)).collect(),
            edges: g.edges().iter().map(|e| (e.id, e.id)).collect(),
        }
    }

    pub fn vertex(&self, v: VertexId) -> Option<VertexId> {
        self.vertices.get(&v).copied()
    }

    pub fn edge(&self, e: EdgeId) -> Option<EdgeId> {
        self.edges.get(&e).copied()
    }

    pub fn edge_set(&self, f: &EdgeSet) -> Option<EdgeSet> {
        f.iter().map(|e| self.edge(e)).collect()
    }
}

/// A finite set of edge identifiers, read as a vector over GF(2).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet(BTreeSet<EdgeId>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(BTreeSet::new())
    }

    /// Symmetric difference.
    pub fn sum(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.symmetric_difference(&other.0).copied().collect())
    }

    pub fn toggle(&mut self, e: EdgeId) {
        if !self.0.remove(&e) {
            self.0.insert(e);
        }
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        self.0.insert(e)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[u32; N]> for EdgeSet {
    fn from(ids: [u32; N]) -> Self {
        ids.into_iter().map(EdgeId).collect()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Sum of two edge sets (symmetric difference).
pub fn edgeset_sum(a: &EdgeSet, b: &EdgeSet) -> EdgeSet {
    a.sum(b)
}

/// A cycle: a circuit together with a traversal. `edges[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    edge_set: EdgeSet,
}

impl Cycle {
    /// Orders the edges of a circuit into a traversal, starting at its
    /// smallest vertex and leaving along its smallest incident edge.
    pub fn from_edge_set(g: &Multigraph, f: &EdgeSet) -> Result<Cycle> {
        if !is_circuit(g, f)? {
            return Err(Error::NotACircuit);
        }
        let idx = g.edge_indices(f);
        if idx.len() == 1 {
            let e = g.edges()[idx[0]];
            return Ok(Cycle::new_unchecked(vec![e.u], vec![e.id]));
        }
        let mut at: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &ei in &idx {
            let (a, b) = g.ends(ei);
            at.entry(a).or_default().push(ei);
            at.entry(b).or_default().push(ei);
        }
        let start = *at.keys().next().unwrap();
        let mut vertices = vec![];
        let mut edges = vec![];
        let mut cur = start;
        let mut prev_edge = usize::MAX;
        loop {
            vertices.push(g.vertices()[cur]);
            let ei = *at[&cur].iter().filter(|&&e| e != prev_edge).min().unwrap();
            edges.push(g.edges()[ei].id);
            cur = g.opposite(ei, cur);
            prev_edge = ei;
            if cur == start {
                break;
            }
        }
        Ok(Cycle::new_unchecked(vertices, edges))
    }

    /// Builds a cycle from a closed walk without validating it.
    pub fn new_unchecked(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Cycle {
        let edge_set = edges.iter().copied().collect();
        Cycle {
            vertices,
            edges,
            edge_set,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn edge_set(&self) -> &EdgeSet {
        &self.edge_set
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }
}

/// The set of edges between the two sides of a vertex bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub side_x: BTreeSet<VertexId>,
    pub side_y: BTreeSet<VertexId>,
    pub edge_set: EdgeSet,
}

impl Cut {
    pub fn from_side(g: &Multigraph, side_x: BTreeSet<VertexId>) -> Result<Cut> {
        if let Some(&v) = side_x.iter().find(|v| !g.has_vertex(**v)) {
            return Err(Error::ForeignVertex(v));
        }
        let side_y: BTreeSet<VertexId> = g.vertices().iter().copied().filter(|v| !side_x.contains(v)).collect();
        let edge_set = g
            .edges()
            .iter()
            .filter(|e| side_x.contains(&e.u) != side_x.contains(&e.v))
            .map(|e| e.id)
            .collect();
        Ok(Cut {
            side_x,
            side_y,
            edge_set,
        })
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }
}

/// Component label per vertex index (labels are the smallest member index).
pub(crate) fn component_labels(g: &Multigraph) -> Vec<usize> {
    let mut uf = UnionFind::new(g.vertex_count());
    for ei in 0..g.edge_count() {
        let (a, b) = g.ends(ei);
        uf.union(a, b);
    }
    (0..g.vertex_count()).map(|v| uf.find(v)).collect()
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Multigraph) -> Vec<Vec<VertexId>> {
    let labels = component_labels(g);
    let mut classes: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for (i, &l) in labels.iter().enumerate() {
        classes.entry(l).or_default().push(g.vertices()[i]);
    }
    classes.into_values().collect()
}

pub fn is_connected(g: &Multigraph) -> bool {
    components(g).len() <= 1
}

/// Cyclomatic number `m - n + c`.
pub fn cycle_space_dimension(g: &Multigraph) -> usize {
    g.edge_count() + components(g).len() - g.vertex_count()
}

/// Whether `f` is the edge set of a cycle: nonempty, connected, and every
/// touched vertex has degree exactly two in `f` (a loop counts twice).
pub fn is_circuit(g: &Multigraph, f: &EdgeSet) -> Result<bool> {
    g.check_edges(f)?;
    Ok(is_circuit_indices(g, &g.edge_indices(f)))
}

pub(crate) fn is_circuit_indices(g: &Multigraph, idx: &[usize]) -> bool {
    if idx.is_empty() {
        return false;
    }
    let mut deg: HashMap<usize, usize> = HashMap::new();
    for &ei in idx {
        let (a, b) = g.ends(ei);
        *deg.entry(a).or_default() += 1;
        *deg.entry(b).or_default() += 1;
    }
    if deg.values().any(|&d| d != 2) {
        return false;
    }
    // 2-regular, so connected iff the number of edges equals one traversal.
    let verts: Vec<usize> = deg.keys().copied().collect();
    let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(verts.len());
    let mut merges = 0;
    for &ei in idx {
        let (a, b) = g.ends(ei);
        if uf.union(pos[&a], pos[&b]) {
            merges += 1;
        }
    }
    merges + 1 == verts.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: u32) -> VertexId {
        VertexId(x)
    }

    fn k4() -> Multigraph {
        Multigraph::from_pairs(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn builds_k4() {
        let g = k4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_simple());
    }

    #[test]
    fn accepts_digon_and_loop() {
        let g = Multigraph::from_pairs(2, &[(1, 2), (1, 2), (2, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(!g.is_simple());
        assert_eq!(g.degree(1), 4);
    }

    #[test]
    fn rejects_dangling_endpoint() {
        let err = Multigraph::from_pairs(2, &[(1, 9)]).unwrap_err();
        assert_eq!(
            err,
            Error::DanglingEndpoint {
                edge: EdgeId(1),
                vertex: v(9)
            }
        );
        assert!(err.to_string().contains("dangling endpoint"));
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = Multigraph::new([v(1), v(2)], [(EdgeId(1), v(1), v(2)), (EdgeId(1), v(2), v(1))]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge(EdgeId(1)));
    }

    #[test]
    fn sums() {
        let a = EdgeSet::from([1, 2]);
        let b = EdgeSet::from([2, 3]);
        assert_eq!(edgeset_sum(&a, &b), EdgeSet::from([1, 3]));
        assert!(edgeset_sum(&a, &a).is_empty());
    }

    #[test]
    fn k4_triangles_sum_to_quadrilateral() {
        let g = k4();
        // e1=12 e2=13 e3=14 e4=23 e5=24 e6=34
        let t123 = EdgeSet::from([1, 4, 2]);
        let t134 = EdgeSet::from([2, 6, 3]);
        let quad = g.sum(&t123, &t134).unwrap();
        assert_eq!(quad, EdgeSet::from([1, 4, 6, 3]));
        assert!(is_circuit(&g, &quad).unwrap());
    }

    #[test]
    fn host_mismatch_rejected() {
        let g = k4();
        assert_eq!(
            g.sum(&EdgeSet::from([1]), &EdgeSet::from([42])),
            Err(Error::ForeignEdge(EdgeId(42)))
        );
    }

    #[test]
    fn circuits() {
        let g = k4();
        assert!(is_circuit(&g, &EdgeSet::from([1, 4, 2])).unwrap());
        assert!(!is_circuit(&g, &EdgeSet::from([1, 6])).unwrap());
        assert!(!is_circuit(&g, &EdgeSet::new()).unwrap());
        let two = Multigraph::from_pairs(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(!is_circuit(&two, &two.all_edges()).unwrap());
        let lp = Multigraph::from_pairs(1, &[(1, 1)]).unwrap();
        assert!(is_circuit(&lp, &EdgeSet::from([1])).unwrap());
        let digon = Multigraph::from_pairs(2, &[(1, 2), (1, 2)]).unwrap();
        assert!(is_circuit(&digon, &digon.all_edges()).unwrap());
    }

    #[test]
    fn component_counts() {
        assert_eq!(components(&k4()).len(), 1);
        let two = Multigraph::from_pairs(
            8,
            &[
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
                (5, 6),
                (5, 7),
                (5, 8),
                (6, 7),
                (6, 8),
                (7, 8),
            ],
        )
        .unwrap();
        let cs = components(&two);
        assert_eq!(cs.len(), 2);
        assert!(cs.iter().all(|c| c.len() == 4));
        let empty = Multigraph::new([], []).unwrap();
        assert!(components(&empty).is_empty());
    }

    #[test]
    fn dimensions() {
        assert_eq!(cycle_space_dimension(&k4()), 3);
        let hubs =
            Multigraph::from_pairs(6, &[(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2), (1, 6), (6, 2)]).unwrap();
        assert_eq!(cycle_space_dimension(&hubs), 3);
        let digon = Multigraph::from_pairs(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(cycle_space_dimension(&digon), 1);
    }

    #[test]
    fn cycle_traversal() {
        let g = k4();
        let c = Cycle::from_edge_set(&g, &EdgeSet::from([1, 4, 6, 3])).unwrap();
        assert_eq!(c.vertices(), &[v(1), v(2), v(3), v(4)]);
        assert_eq!(c.edges(), &[EdgeId(1), EdgeId(4), EdgeId(6), EdgeId(3)]);
        assert!(Cycle::from_edge_set(&g, &EdgeSet::from([1, 6])).is_err());
    }

    #[test]
    fn cut_from_side() {
        let g = k4();
        let cut = Cut::from_side(&g, [v(1)].into()).unwrap();
        assert_eq!(cut.edge_set, EdgeSet::from([1, 2, 3]));
        assert_eq!(cut.side_y.len(), 3);
    }
}
