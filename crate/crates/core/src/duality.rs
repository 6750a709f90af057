//! Geometric duals of embedded graphs and the circuit / tight-cut
//! correspondence between a graph and its dual.
//!
//! The dual has one vertex per face (vertex identifier = face index) and one
//! edge per primal edge. Dual edges reuse the primal edge identifiers, so the
//! edge bijection is the identity on identifiers; it is still carried
//! explicitly so that callers never rely on that coincidence.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::embedding::{Dart, Embedding};
use crate::error::{Error, Result};
use crate::graph::{component_labels, is_circuit_indices, Cut, EdgeId, EdgeSet, Multigraph, VertexId};
use crate::oracle::{enumerate_circuits, enumerate_tight_cuts, DEFAULT_SEARCH_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    ToDual,
    ToPrimal,
}

#[derive(Debug, Clone)]
pub struct DualPair {
    pub embedding: Embedding,
    pub dual: Multigraph,
    edge_map: BTreeMap<EdgeId, EdgeId>,
    inverse: BTreeMap<EdgeId, EdgeId>,
}

impl DualPair {
    pub fn primal(&self) -> &Multigraph {
        self.embedding.graph()
    }

    pub fn edge_map(&self) -> &BTreeMap<EdgeId, EdgeId> {
        &self.edge_map
    }

    /// Dual vertex standing for face `fi`.
    pub fn face_vertex(fi: usize) -> VertexId {
        VertexId(fi as u32)
    }
}

/// Builds the geometric dual of an embedded connected graph.
pub fn build_dual(embedding: &Embedding) -> DualPair {
    let g = embedding.graph();
    let vertices = (0..embedding.faces().len()).map(DualPair::face_vertex);
    let edges: Vec<(EdgeId, VertexId, VertexId)> = (0..g.edge_count())
        .map(|ei| {
            let a = embedding.face_of_dart(Dart::new(ei, 0));
            let b = embedding.face_of_dart(Dart::new(ei, 1));
            (g.edges()[ei].id, DualPair::face_vertex(a), DualPair::face_vertex(b))
        })
        .collect();
    let dual = Multigraph::new(vertices, edges).expect("faces and edges are consistent");
    let edge_map: BTreeMap<EdgeId, EdgeId> = g.edges().iter().map(|e| (e.id, e.id)).collect();
    let inverse = edge_map.iter().map(|(&a, &b)| (b, a)).collect();
    DualPair {
        embedding: embedding.clone(),
        dual,
        edge_map,
        inverse,
    }
}

/// Element-wise image of `f` under the edge bijection (or its inverse).
pub fn image_of(dp: &DualPair, f: &EdgeSet, direction: Direction) -> Result<EdgeSet> {
    let map = match direction {
        Direction::ToDual => &dp.edge_map,
        Direction::ToPrimal => &dp.inverse,
    };
    f.iter()
        .map(|e| map.get(&e).copied().ok_or(Error::ForeignEdge(e)))
        .collect()
}

/// The bipartition of a tight cut, or `None` if `b` is not one.
///
/// Tight means: deleting `b` leaves exactly two components, and `b` is the
/// full set of edges between them.
pub fn tight_cut_sides(g: &Multigraph, b: &EdgeSet) -> Option<Cut> {
    if g.check_edges(b).is_err() {
        return None;
    }
    let rest = g.without_edges(b);
    let labels = component_labels(&rest);
    let roots: BTreeSet<usize> = labels.iter().copied().collect();
    if roots.len() != 2 {
        return None;
    }
    let x_root = labels[0];
    let side: BTreeSet<VertexId> = (0..g.vertex_count())
        .filter(|&v| labels[v] == x_root)
        .map(|v| g.vertices()[v])
        .collect();
    let cut = Cut::from_side(g, side).ok()?;
    (cut.edge_set == *b).then_some(cut)
}

pub fn is_tight_cut(g: &Multigraph, b: &EdgeSet) -> bool {
    tight_cut_sides(g, b).is_some()
}

/// Whether `f` satisfies the duality condition: `f` is a circuit of the
/// primal iff its image is a nonempty tight cut of the dual.
pub fn check_duality_condition(dp: &DualPair, f: &EdgeSet) -> Result<bool> {
    let g = dp.primal();
    g.check_edges(f)?;
    let circuit = is_circuit_indices(g, &g.edge_indices(f));
    let image = image_of(dp, f, Direction::ToDual)?;
    let tight = !image.is_empty() && is_tight_cut(&dp.dual, &image);
    Ok(circuit == tight)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualityStrategy {
    /// Every subset of primal edges.
    AllSubsets,
    /// Compare the set of all circuits with the set of all tight cuts.
    CircuitFirst,
}

#[derive(Debug, Clone, Copy)]
pub struct DualityConfig {
    /// Largest primal edge count for [`DualityStrategy::AllSubsets`].
    pub edge_budget: usize,
    /// Largest dual vertex count for [`DualityStrategy::CircuitFirst`].
    pub face_budget: usize,
    pub strategy: DualityStrategy,
}

impl Default for DualityConfig {
    fn default() -> Self {
        DualityConfig {
            edge_budget: 16,
            face_budget: 24,
            strategy: DualityStrategy::AllSubsets,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub circuits: usize,
    pub tight_cuts: usize,
    pub checked: u64,
    /// Primal edge sets on which the condition fails.
    pub violations: Vec<EdgeSet>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exhaustively verifies the duality condition on `dp`.
pub fn verify_duality_exhaustive(dp: &DualPair, config: &DualityConfig) -> Result<DualityReport> {
    match config.strategy {
        DualityStrategy::AllSubsets => all_subsets(dp, config.edge_budget),
        DualityStrategy::CircuitFirst => circuit_first(dp, config.face_budget),
    }
}

fn all_subsets(dp: &DualPair, budget: usize) -> Result<DualityReport> {
    let g = dp.primal();
    let m = g.edge_count();
    if m > budget || m >= 63 {
        return Err(Error::BudgetExceeded {
            what: "edges for subset enumeration",
            limit: budget as u64,
        });
    }
    let ids: Vec<EdgeId> = g.edges().iter().map(|e| e.id).collect();
    let results: Vec<(bool, bool, Option<EdgeSet>)> = (0u64..1 << m)
        .into_par_iter()
        .map(|mask| {
            let f: EdgeSet = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
            let idx: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            let circuit = is_circuit_indices(g, &idx);
            let image = image_of(dp, &f, Direction::ToDual).expect("edges of primal");
            let tight = !image.is_empty() && is_tight_cut(&dp.dual, &image);
            (circuit, tight, (circuit != tight).then_some(f))
        })
        .collect();
    Ok(DualityReport {
        circuits: results.iter().filter(|r| r.0).count(),
        tight_cuts: results.iter().filter(|r| r.1).count(),
        checked: 1 << m,
        violations: results.into_iter().filter_map(|r| r.2).collect(),
    })
}

fn circuit_first(dp: &DualPair, face_budget: usize) -> Result<DualityReport> {
    let circuits: BTreeSet<EdgeSet> = enumerate_circuits(dp.primal(), None, DEFAULT_SEARCH_BUDGET)?
        .into_iter()
        .collect();
    let cuts: BTreeSet<EdgeSet> = enumerate_tight_cuts(&dp.dual, face_budget)?
        .into_iter()
        .map(|c| image_of(dp, &c.edge_set, Direction::ToPrimal))
        .collect::<Result<_>>()?;
    Ok(DualityReport {
        circuits: circuits.len(),
        tight_cuts: cuts.len(),
        checked: (circuits.len() + cuts.len()) as u64,
        violations: circuits.symmetric_difference(&cuts).cloned().collect(),
    })
}

/// Dual vertex stars pulled back to the primal, one per face (loops at a
/// dual vertex are not part of its star).
pub fn dual_star_preimages(dp: &DualPair) -> Result<Vec<EdgeSet>> {
    let d = &dp.dual;
    (0..d.vertex_count())
        .map(|v| {
            let star: EdgeSet = d
                .incident(v)
                .iter()
                .filter(|&&e| d.ends(e).0 != d.ends(e).1)
                .map(|&e| d.edges()[e].id)
                .collect();
            image_of(dp, &star, Direction::ToPrimal)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::automorphism_group;

    fn dual_of(g: &Multigraph) -> DualPair {
        build_dual(&Embedding::planar(g).unwrap())
    }

    /// Brute-force isomorphism test via the automorphism search on the
    /// disjoint union.
    fn isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
        if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        let off = a.vertex_count() as u32 + 1;
        let eoff = a.edge_count() as u32 + 1;
        let vs = a
            .vertices()
            .iter()
            .copied()
            .chain(b.vertices().iter().map(|v| VertexId(v.0 + off)));
        let mut es: Vec<_> = a.edges().iter().map(|e| (e.id, e.u, e.v)).collect();
        let bv: BTreeMap<VertexId, VertexId> = b.vertices().iter().map(|&v| (v, VertexId(v.0 + off))).collect();
        let bmax = b.vertices().iter().map(|v| v.0).max().unwrap_or(0);
        let _ = bmax;
        for (i, e) in b.edges().iter().enumerate() {
            es.push((EdgeId(eoff + i as u32 + 1000), bv[&e.u], bv[&e.v]));
        }
        let u = Multigraph::new(vs, es).unwrap();
        let aut = automorphism_group(&u, 1 << 24).unwrap();
        let na = a.vertex_count();
        aut.elements().iter().any(|x| x.vertex_map[0] >= na)
    }

    #[test]
    fn k4_is_self_dual() {
        let dp = dual_of(&fixtures::k4());
        assert_eq!(dp.dual.vertex_count(), 4);
        assert!((0..4).all(|v| dp.dual.degree(v) == 3));
        assert!(isomorphic(&dp.dual, &fixtures::k4()));
    }

    #[test]
    fn cube_dual_is_octahedron() {
        let dp = dual_of(&fixtures::cube());
        assert_eq!((dp.dual.vertex_count(), dp.dual.edge_count()), (6, 12));
        assert!(isomorphic(&dp.dual, &fixtures::octahedron()));
    }

    #[test]
    fn single_edge_dual_is_a_loop() {
        let dp = dual_of(&fixtures::path(2));
        assert_eq!(dp.dual.vertex_count(), 1);
        assert!(dp.dual.edges()[0].is_loop());
    }

    #[test]
    fn degree_matches_face_length() {
        for g in [fixtures::prism(), fixtures::bowtie(), fixtures::wheel(5)] {
            let dp = dual_of(&g);
            for (fi, f) in dp.embedding.faces().iter().enumerate() {
                assert_eq!(dp.dual.degree(fi), f.len());
            }
        }
    }

    #[test]
    fn images() {
        let dp = dual_of(&fixtures::k4());
        assert!(image_of(&dp, &EdgeSet::new(), Direction::ToDual).unwrap().is_empty());
        let f = EdgeSet::from([1, 5]);
        let there = image_of(&dp, &f, Direction::ToDual).unwrap();
        assert_eq!(image_of(&dp, &there, Direction::ToPrimal).unwrap(), f);
        assert!(image_of(&dp, &EdgeSet::from([77]), Direction::ToDual).is_err());
        // A facial triangle maps to the star of its dual vertex.
        let tri = EdgeSet::from([1, 2, 4]);
        let img = image_of(&dp, &tri, Direction::ToDual).unwrap();
        let stars = dual_star_preimages(&dp).unwrap();
        assert!(stars.contains(&img));
    }

    #[test]
    fn tightness() {
        let k4 = fixtures::k4();
        assert!(is_tight_cut(&k4, &EdgeSet::from([1, 2, 3])));
        assert!(!is_tight_cut(&k4, &EdgeSet::from([1])));
        assert!(!is_tight_cut(&fixtures::path(3), &EdgeSet::from([1, 2])));
        // Two components, but one removed edge runs inside a side.
        let p = fixtures::path(4);
        assert!(is_tight_cut(&p, &EdgeSet::from([2])));
        let tri_tail = Multigraph::from_pairs(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        assert!(!is_tight_cut(&tri_tail, &EdgeSet::from([4, 1])));
    }

    #[test]
    fn condition2_examples() {
        let dp = dual_of(&fixtures::k4());
        assert!(check_duality_condition(&dp, &EdgeSet::from([1, 2, 4])).unwrap());
        assert!(check_duality_condition(&dp, &EdgeSet::from([1])).unwrap());
        assert!(check_duality_condition(&dp, &EdgeSet::new()).unwrap());
    }

    #[test]
    fn k4_exhaustive_is_seven_to_seven() {
        let dp = dual_of(&fixtures::k4());
        let r = verify_duality_exhaustive(&dp, &DualityConfig::default()).unwrap();
        assert_eq!((r.circuits, r.tight_cuts), (7, 7));
        assert!(r.holds());
        let cf = DualityConfig {
            strategy: DualityStrategy::CircuitFirst,
            ..DualityConfig::default()
        };
        let r2 = verify_duality_exhaustive(&dp, &cf).unwrap();
        assert_eq!((r2.circuits, r2.tight_cuts), (7, 7));
        assert!(r2.holds());
    }

    #[test]
    fn cube_faces_map_to_octahedron_stars() {
        let g = fixtures::cube();
        let dp = dual_of(&g);
        let cf = DualityConfig {
            strategy: DualityStrategy::CircuitFirst,
            ..DualityConfig::default()
        };
        assert!(verify_duality_exhaustive(&dp, &cf).unwrap().holds());
        let stars: BTreeSet<EdgeSet> = dual_star_preimages(&dp).unwrap().into_iter().collect();
        for f in dp.embedding.faces() {
            assert!(stars.contains(&f.boundary));
        }
    }

    #[test]
    fn digon_dual() {
        let dp = dual_of(&fixtures::digon());
        assert_eq!(dp.dual.vertex_count(), 2);
        assert!(is_tight_cut(&dp.dual, &dp.dual.all_edges()));
        assert!(verify_duality_exhaustive(&dp, &DualityConfig::default())
            .unwrap()
            .holds());
    }

    #[test]
    fn refuses_over_budget() {
        let dp = dual_of(&fixtures::dodecahedron());
        assert!(matches!(
            verify_duality_exhaustive(&dp, &DualityConfig::default()),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
