//! Combinatorial embeddings on the sphere.
//!
//! An embedding is a [`RotationSystem`]: a cyclic order of the darts at every
//! vertex. Faces are the orbits of the face-tracing permutation
//! `d -> succ(rev(d))`. There is no distinguished outer face; "inside" and
//! "outside" of a cycle are the two symmetric [`Side`]s.

mod planarity;

use std::collections::BTreeSet;

use crate::error::{invariant, Error, Result};
use crate::graph::{component_labels, Cycle, EdgeId, EdgeSet, Multigraph, UnionFind, VertexId};
use crate::oracle::Automorphism;

pub use planarity::planar_embed;

/// One end of an edge: `2 * edge_index + end`, where end 0 sits at the
/// smaller endpoint. A loop has both darts at its vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub u32);

impl Dart {
    pub fn new(edge_index: usize, end: usize) -> Dart {
        Dart((edge_index * 2 + end) as u32)
    }

    pub fn edge_index(self) -> usize {
        self.0 as usize / 2
    }

    pub fn end(self) -> usize {
        self.0 as usize % 2
    }

    pub fn rev(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Vertex index the dart is attached to.
    pub fn tail(self, g: &Multigraph) -> usize {
        let (a, b) = g.ends(self.edge_index());
        if self.end() == 0 {
            a
        } else {
            b
        }
    }

    pub fn head(self, g: &Multigraph) -> usize {
        self.rev().tail(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    orders: Vec<Vec<Dart>>,
    succ: Vec<Dart>,
}

impl RotationSystem {
    /// Validates per-vertex dart orders (indexed by vertex index).
    pub fn new(g: &Multigraph, orders: Vec<Vec<Dart>>) -> Result<RotationSystem> {
        if orders.len() != g.vertex_count() {
            return Err(Error::InvalidRotation(format!(
                "{} vertex orders for {} vertices",
                orders.len(),
                g.vertex_count()
            )));
        }
        let darts = 2 * g.edge_count();
        let mut succ = vec![Dart(u32::MAX); darts];
        let mut seen = vec![false; darts];
        for (v, order) in orders.iter().enumerate() {
            for (i, &d) in order.iter().enumerate() {
                if d.index() >= darts || seen[d.index()] {
                    return Err(Error::InvalidRotation(format!("dart {} repeated or unknown", d.0)));
                }
                if d.tail(g) != v {
                    return Err(Error::InvalidRotation(format!(
                        "dart {} listed at vertex {} but attached to {}",
                        d.0,
                        g.vertices()[v],
                        g.vertices()[d.tail(g)]
                    )));
                }
                seen[d.index()] = true;
                succ[d.index()] = order[(i + 1) % order.len()];
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidRotation(format!("dart {d} missing")));
        }
        Ok(RotationSystem { orders, succ })
    }

    /// Dart orders keyed by identifiers: `(vertex, [(edge, end)])`.
    pub fn to_ids(&self, g: &Multigraph) -> Vec<(VertexId, Vec<(EdgeId, u8)>)> {
        self.orders
            .iter()
            .enumerate()
            .map(|(v, o)| {
                let ds = o
                    .iter()
                    .map(|d| (g.edges()[d.edge_index()].id, d.end() as u8))
                    .collect();
                (g.vertices()[v], ds)
            })
            .collect()
    }

    pub fn from_ids(g: &Multigraph, orders: &[(VertexId, Vec<(EdgeId, u8)>)]) -> Result<RotationSystem> {
        let mut out = vec![Vec::new(); g.vertex_count()];
        for (v, ds) in orders {
            let vi = g.vertex_index(*v).ok_or(Error::ForeignVertex(*v))?;
            for &(e, end) in ds {
                let ei = g.edge_index(e).ok_or(Error::ForeignEdge(e))?;
                out[vi].push(Dart::new(ei, end as usize & 1));
            }
        }
        RotationSystem::new(g, out)
    }

    pub fn order(&self, vertex_index: usize) -> &[Dart] {
        &self.orders[vertex_index]
    }

    pub fn orders(&self) -> &[Vec<Dart>] {
        &self.orders
    }

    pub fn succ(&self, d: Dart) -> Dart {
        self.succ[d.index()]
    }

    /// The face-tracing permutation.
    pub fn face_step(&self, d: Dart) -> Dart {
        self.succ(d.rev())
    }
}

/// One face-tracing orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
    /// Edges appearing on the orbit (once or twice).
    pub boundary: EdgeSet,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertices in traversal order (with repetitions, if any).
    pub fn walk(&self, g: &Multigraph) -> Vec<VertexId> {
        self.darts.iter().map(|d| g.vertices()[d.tail(g)]).collect()
    }
}

/// All face orbits, each starting at its smallest dart, ordered by that dart.
pub fn trace_faces(g: &Multigraph, rot: &RotationSystem) -> Vec<Face> {
    let n = 2 * g.edge_count();
    let mut seen = vec![false; n];
    let mut faces = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = Dart(start as u32);
        while !seen[d.index()] {
            seen[d.index()] = true;
            darts.push(d);
            d = rot.face_step(d);
        }
        let boundary = darts.iter().map(|d| g.edges()[d.edge_index()].id).collect();
        faces.push(Face { darts, boundary });
    }
    faces
}

/// Checks `n - m + f = 2` on every component that has an edge.
pub fn is_genus_zero(g: &Multigraph, rot: &RotationSystem) -> bool {
    let labels = component_labels(g);
    let mut v = vec![0i64; g.vertex_count()];
    let mut e = vec![0i64; g.vertex_count()];
    let mut f = vec![0i64; g.vertex_count()];
    for &l in &labels {
        v[l] += 1;
    }
    for ei in 0..g.edge_count() {
        e[labels[g.ends(ei).0]] += 1;
    }
    for face in trace_faces(g, rot) {
        f[labels[face.darts[0].tail(g)]] += 1;
    }
    (0..g.vertex_count())
        .filter(|&l| e[l] > 0)
        .all(|l| v[l] - e[l] + f[l] == 2)
}

/// Face boundaries as cycles. Requires every face orbit to be a simple
/// closed walk, which holds for 2-connected hosts.
pub fn face_boundary_cycles(g: &Multigraph, rot: &RotationSystem) -> Result<Vec<Cycle>> {
    trace_faces(g, rot).iter().map(|face| face_cycle(g, face)).collect()
}

fn face_cycle(g: &Multigraph, face: &Face) -> Result<Cycle> {
    let mut vs = BTreeSet::new();
    let mut es = BTreeSet::new();
    let mut vertices = Vec::with_capacity(face.len());
    let mut edges = Vec::with_capacity(face.len());
    for d in &face.darts {
        let v = g.vertices()[d.tail(g)];
        let e = g.edges()[d.edge_index()].id;
        if !vs.insert(v) {
            return Err(Error::NotTwoConnected(Some(v)));
        }
        if !es.insert(e) {
            return Err(Error::NotTwoConnected(None));
        }
        vertices.push(v);
        edges.push(e);
    }
    Ok(Cycle::new_unchecked(vertices, edges))
}

/// Whether every automorphism maps the set of face boundaries onto itself.
pub fn facial_invariance_check(g: &Multigraph, rot: &RotationSystem, autos: &[Automorphism]) -> bool {
    let boundaries: BTreeSet<EdgeSet> = trace_faces(g, rot).into_iter().map(|f| f.boundary).collect();
    autos
        .iter()
        .all(|a| boundaries.iter().all(|b| boundaries.contains(&a.apply_edge_set(g, b))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    OnCycle,
    SideA,
    SideB,
}

/// A graph together with a rotation system and its traced faces.
#[derive(Debug, Clone)]
pub struct Embedding {
    graph: Multigraph,
    rotation: RotationSystem,
    faces: Vec<Face>,
    face_of_dart: Vec<usize>,
    component: Vec<usize>,
}

impl Embedding {
    /// Fails unless the rotation system has genus zero.
    pub fn new(graph: Multigraph, rotation: RotationSystem) -> Result<Embedding> {
        if !is_genus_zero(&graph, &rotation) {
            return Err(Error::InvalidRotation("not a genus-0 rotation system".into()));
        }
        let faces = trace_faces(&graph, &rotation);
        let mut face_of_dart = vec![0; 2 * graph.edge_count()];
        for (fi, f) in faces.iter().enumerate() {
            for d in &f.darts {
                face_of_dart[d.index()] = fi;
            }
        }
        let component = component_labels(&graph);
        Ok(Embedding {
            graph,
            rotation,
            faces,
            face_of_dart,
            component,
        })
    }

    /// Embeds the graph with [`planar_embed`].
    pub fn planar(graph: &Multigraph) -> Result<Embedding> {
        let rot = planar_embed(graph)?;
        Embedding::new(graph.clone(), rot).map_err(|e| invariant!("planar_embed produced {e}"))
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_of_dart(&self, d: Dart) -> usize {
        self.face_of_dart[d.index()]
    }

    /// Splits the vertices off a cycle into its two sides.
    pub fn sides(&self, c: &EdgeSet) -> Result<CycleSides> {
        let g = &self.graph;
        g.check_edges(c)?;
        let idx = g.edge_indices(c);
        let Some(&first) = idx.first() else {
            return Err(Error::NotACircuit);
        };
        let comp = self.component[g.ends(first).0];
        let mut uf = UnionFind::new(self.faces.len());
        let mut in_c = vec![false; g.edge_count()];
        for &ei in &idx {
            in_c[ei] = true;
        }
        for ei in (0..g.edge_count()).filter(|&ei| !in_c[ei]) {
            uf.union(
                self.face_of_dart[Dart::new(ei, 0).index()],
                self.face_of_dart[Dart::new(ei, 1).index()],
            );
        }
        let mut roots: Vec<usize> = (0..self.faces.len())
            .filter(|&fi| self.component[self.faces[fi].darts[0].tail(g)] == comp)
            .map(|fi| uf.find(fi))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() != 2 {
            return Err(invariant!(
                "dual minus the cycle's edges has {} components instead of 2",
                roots.len()
            ));
        }
        let mut on = vec![false; g.vertex_count()];
        for &ei in &idx {
            let (a, b) = g.ends(ei);
            on[a] = true;
            on[b] = true;
        }
        let mut side = vec![None; g.vertex_count()];
        for v in 0..g.vertex_count() {
            if self.component[v] != comp {
                continue;
            }
            if on[v] {
                side[v] = Some(Side::OnCycle);
                continue;
            }
            let d = self.rotation.order(v)[0];
            let r = uf.find(self.face_of_dart[d.index()]);
            side[v] = Some(if r == roots[0] { Side::SideA } else { Side::SideB });
        }
        Ok(CycleSides { side })
    }

    pub fn vertex_side(&self, c: &Cycle, v: VertexId) -> Result<Side> {
        let vi = self.graph.vertex_index(v).ok_or(Error::ForeignVertex(v))?;
        self.sides(c.edge_set())?
            .side_of_index(vi)
            .ok_or(Error::DifferentComponent(v))
    }
}

/// Side of every vertex with respect to one cycle; `None` for vertices in
/// other components.
#[derive(Debug, Clone)]
pub struct CycleSides {
    side: Vec<Option<Side>>,
}

impl CycleSides {
    pub fn side_of_index(&self, vi: usize) -> Option<Side> {
        self.side[vi]
    }

    /// Whether the vertices strictly off the cycle include both sides.
    pub fn separates<I: IntoIterator<Item = usize>>(&self, vertex_indices: I) -> bool {
        let (mut a, mut b) = (false, false);
        for v in vertex_indices {
            match self.side[v] {
                Some(Side::SideA) => a = true,
                Some(Side::SideB) => b = true,
                _ => {}
            }
        }
        a && b
    }
}

/// Side of `v` with respect to cycle `c`, via the components of the
/// geometric dual after deleting the dual edges of `c`.
pub fn vertex_side(g: &Multigraph, rot: &RotationSystem, c: &Cycle, v: VertexId) -> Result<Side> {
    Embedding::new(g.clone(), rot.clone())?.vertex_side(c, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::automorphism_group;

    #[test]
    fn k4_faces() {
        let g = fixtures::k4();
        let rot = planar_embed(&g).unwrap();
        assert!(is_genus_zero(&g, &rot));
        let faces = trace_faces(&g, &rot);
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3 && f.boundary.len() == 3));
        let cycles = face_boundary_cycles(&g, &rot).unwrap();
        assert_eq!(cycles.len(), 4);
    }

    #[test]
    fn cube_faces_are_quadrilaterals() {
        let g = fixtures::cube();
        let rot = planar_embed(&g).unwrap();
        let faces = trace_faces(&g, &rot);
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|f| f.len() == 4));
    }

    #[test]
    fn nonplanar_graphs_rejected() {
        assert_eq!(planar_embed(&fixtures::k5()), Err(Error::NonPlanar));
        assert_eq!(planar_embed(&fixtures::k33()), Err(Error::NonPlanar));
    }

    #[test]
    fn digon_and_single_edge() {
        let g = fixtures::digon();
        let rot = planar_embed(&g).unwrap();
        let faces = trace_faces(&g, &rot);
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.boundary.len() == 2));

        let k2 = fixtures::path(2);
        let rot = planar_embed(&k2).unwrap();
        let faces = trace_faces(&k2, &rot);
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 2);
        assert_eq!(faces[0].boundary.len(), 1);
    }

    #[test]
    fn every_edge_covered_twice() {
        for g in [
            fixtures::prism(),
            fixtures::bowtie(),
            fixtures::triangle_with_loop(),
            fixtures::loops_and_bridges(),
        ] {
            let rot = planar_embed(&g).unwrap();
            assert!(is_genus_zero(&g, &rot));
            let mut cover = vec![0; g.edge_count()];
            for f in trace_faces(&g, &rot) {
                for d in f.darts {
                    cover[d.edge_index()] += 1;
                }
            }
            assert!(cover.iter().all(|&c| c == 2));
        }
    }

    #[test]
    fn bowtie_boundary_repeats_vertex() {
        let g = fixtures::bowtie();
        let rot = planar_embed(&g).unwrap();
        assert!(matches!(face_boundary_cycles(&g, &rot), Err(Error::NotTwoConnected(_))));
    }

    #[test]
    fn rotation_validation() {
        let g = fixtures::digon();
        let bad = vec![vec![Dart(0), Dart(2)], vec![Dart(0), Dart(3)]];
        assert!(RotationSystem::new(&g, bad).is_err());
        let rot = planar_embed(&g).unwrap();
        let ids = rot.to_ids(&g);
        assert_eq!(RotationSystem::from_ids(&g, &ids).unwrap(), rot);
    }

    #[test]
    fn facial_invariance() {
        for g in [fixtures::k4(), fixtures::cube()] {
            let rot = planar_embed(&g).unwrap();
            let aut = automorphism_group(&g, 1 << 20).unwrap();
            assert!(facial_invariance_check(&g, &rot, aut.elements()));
            assert!(facial_invariance_check(&g, &rot, &[Automorphism::identity(&g)]));
        }
    }

    #[test]
    fn k4_vertex_side() {
        let g = fixtures::k4();
        let emb = Embedding::planar(&g).unwrap();
        let c = Cycle::from_edge_set(&g, &EdgeSet::from([1, 2, 4])).unwrap();
        let side = emb.vertex_side(&c, VertexId(4)).unwrap();
        assert_ne!(side, Side::OnCycle);
        assert_eq!(emb.vertex_side(&c, VertexId(1)).unwrap(), Side::OnCycle);
        let sides = emb.sides(c.edge_set()).unwrap();
        assert_eq!(sides.side_of_index(3), Some(side));
    }

    #[test]
    fn cube_face_has_all_others_on_one_side() {
        let g = fixtures::cube();
        let emb = Embedding::planar(&g).unwrap();
        let face = face_boundary_cycles(&g, emb.rotation()).unwrap().remove(0);
        let sides: BTreeSet<Side> = g
            .vertices()
            .iter()
            .filter(|v| !face.contains_vertex(**v))
            .map(|&v| emb.vertex_side(&face, v).unwrap())
            .collect();
        assert_eq!(sides.len(), 1);
    }
}
