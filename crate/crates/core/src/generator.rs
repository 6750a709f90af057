//! Canonical nested generating sets of the cycle space.
//!
//! 3-connected graphs use their face boundaries. 2-connected graphs are
//! first extended by one edge per incomplete adhesion set of the Tutte
//! decomposition; the generators are then the cycles of the cycle parts,
//! the face boundaries of the 3-connected parts and the digons of the bonds.
//! General graphs are handled block by block.

use std::collections::BTreeSet;

use crate::decomposition::{
    block_decomposition, check_two_connected, complete_adhesions, small_separator, torso, tutte_decomposition,
    BlockKind, PartKind, TutteDecomposition,
};
use crate::duality::{build_dual, dual_star_preimages, image_of, tight_cut_sides, Direction};
use crate::embedding::{face_boundary_cycles, Embedding, RotationSystem};
use crate::error::{invariant, Error, Result};
use crate::graph::{cycle_space_dimension, is_circuit, Cycle, Edge, EdgeId, EdgeSet, Multigraph, VertexId};
use crate::nestedness::{cuts_nested, family_nested, FamilyVerdict};
use crate::oracle::{automorphism_group, enumerate_circuits, gf2_rank, in_span, orbit_closed, Gf2Span};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorKind {
    FaceBoundary,
    PartCycle,
    Digon,
    Loop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    pub block: usize,
    /// Node of the block's Tutte decomposition; `None` for loops.
    pub part: Option<usize>,
    pub kind: GeneratorKind,
}

#[derive(Debug, Clone)]
pub struct BlockRecord {
    /// The block, including any added adhesion edges.
    pub graph: Multigraph,
    pub decomposition: Option<TutteDecomposition>,
}

#[derive(Debug, Clone)]
pub struct GeneratingSet {
    pub host: Multigraph,
    /// Edges added to complete adhesion sets; empty unless the input had
    /// connectivity two somewhere.
    pub extension: Vec<Edge>,
    pub cycles: Vec<Cycle>,
    pub provenance: Vec<Provenance>,
    pub blocks: Vec<BlockRecord>,
    pub embedding: Embedding,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    /// Generators that are not circuits of the host.
    pub not_circuits: Vec<usize>,
    pub nested: FamilyVerdict,
    pub rank: usize,
    pub dimension: usize,
    /// Generators whose provenance part is not the unique minimal part
    /// containing them.
    pub part_failures: Vec<usize>,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.not_circuits.is_empty()
            && self.nested.is_nested()
            && self.rank == self.dimension
            && self.part_failures.is_empty()
    }
}

impl GeneratingSet {
    pub fn rotation(&self) -> &RotationSystem {
        self.embedding.rotation()
    }

    pub fn edge_sets(&self) -> Vec<EdgeSet> {
        self.cycles.iter().map(|c| c.edge_set().clone()).collect()
    }

    pub fn rank(&self) -> usize {
        gf2_rank(&self.edge_sets())
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Checks the generating-set invariants on the host.
    pub fn verify(&self) -> Result<Verification> {
        let mut not_circuits = vec![];
        for (i, c) in self.cycles.iter().enumerate() {
            if !is_circuit(&self.host, c.edge_set())? {
                not_circuits.push(i);
            }
        }
        let nested = family_nested(&self.embedding, &self.cycles)?;
        let part_failures = (0..self.cycles.len()).filter(|&i| !self.in_unique_part(i)).collect();
        Ok(Verification {
            not_circuits,
            nested,
            rank: self.rank(),
            dimension: cycle_space_dimension(&self.host),
            part_failures,
        })
    }

    /// Whether the provenance part of generator `i` is the unique minimal
    /// part (by bag inclusion) whose bag holds all its vertices.
    fn in_unique_part(&self, i: usize) -> bool {
        let p = self.provenance[i];
        let Some(t) = p.part else {
            return p.kind == GeneratorKind::Loop;
        };
        let Some(td) = self.blocks.get(p.block).and_then(|b| b.decomposition.as_ref()) else {
            return false;
        };
        let vs: BTreeSet<VertexId> = self.cycles[i].vertices().iter().copied().collect();
        let holders: Vec<usize> = (0..td.nodes.len())
            .filter(|&s| td.nodes[s].bag.is_superset(&vs))
            .collect();
        let minimal: Vec<usize> = holders
            .iter()
            .copied()
            .filter(|&s| {
                !holders.iter().any(|&r| {
                    r != s && td.nodes[r].bag.is_subset(&td.nodes[s].bag) && td.nodes[r].bag != td.nodes[s].bag
                })
            })
            .collect();
        minimal == [t]
    }

    /// Whether every automorphism of the host maps the set of generators
    /// onto itself.
    pub fn is_aut_invariant(&self, budget: u64) -> Result<bool> {
        let group = automorphism_group(&self.host, budget)?;
        Ok(orbit_closed(&self.host, &self.edge_sets(), &group))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GenerateOptions {
    /// Refuse inputs that need adhesion edges.
    pub strict: bool,
}

fn sort_generators(gens: &mut [(Cycle, Provenance)]) {
    gens.sort_by(|a, b| {
        (a.1.block, a.1.part, a.1.kind, a.0.edge_set()).cmp(&(b.1.block, b.1.part, b.1.kind, b.0.edge_set()))
    });
}

fn finish(
    host: Multigraph,
    extension: Vec<Edge>,
    mut gens: Vec<(Cycle, Provenance)>,
    blocks: Vec<BlockRecord>,
    embedding: Embedding,
) -> GeneratingSet {
    sort_generators(&mut gens);
    let (cycles, provenance) = gens.into_iter().unzip();
    GeneratingSet {
        host,
        extension,
        cycles,
        provenance,
        blocks,
        embedding,
    }
}

/// The face boundaries of a planar 3-connected graph.
pub fn generate_3connected(g: &Multigraph) -> Result<GeneratingSet> {
    if let Some(e) = g.edges().iter().find(|e| e.is_loop()) {
        return Err(Error::NotTwoConnected(Some(e.u)));
    }
    if let Some(sep) = small_separator(g) {
        return Err(Error::NotThreeConnected(sep));
    }
    let embedding = Embedding::planar(g)?;
    let cycles = face_boundary_cycles(g, embedding.rotation())?;
    let provenance = Provenance {
        block: 0,
        part: Some(0),
        kind: GeneratorKind::FaceBoundary,
    };
    let gens = cycles.into_iter().map(|c| (c, provenance)).collect();
    let block = BlockRecord {
        graph: g.clone(),
        decomposition: Some(tutte_decomposition(g)?),
    };
    Ok(finish(g.clone(), vec![], gens, vec![block], embedding))
}

/// All edge sets choosing one edge from each option list.
fn expand(options: &[Vec<EdgeId>]) -> Vec<EdgeSet> {
    let mut out = vec![EdgeSet::new()];
    for opts in options {
        out = out
            .iter()
            .flat_map(|partial| {
                opts.iter().map(move |&e| {
                    let mut next = partial.clone();
                    next.insert(e);
                    next
                })
            })
            .collect();
    }
    out
}

/// Generators of a 2-connected block whose adhesion sets are complete.
fn block_generators(bp: &Multigraph, block: usize) -> Result<(Vec<(Cycle, Provenance)>, TutteDecomposition)> {
    let td = tutte_decomposition(bp)?;
    let mut out = vec![];
    let real_options = |x: VertexId, y: VertexId| -> Result<Vec<EdgeId>> {
        let reps = bp.edges_between(x, y);
        if reps.is_empty() {
            return Err(invariant!("adhesion set {{{x},{y}}} is not complete"));
        }
        Ok(reps)
    };
    for (t, node) in td.nodes.iter().enumerate() {
        let prov = |kind| Provenance {
            block,
            part: Some(t),
            kind,
        };
        match node.kind {
            PartKind::EdgePart => {}
            PartKind::BondPart => {
                let real: Vec<EdgeId> = node.real_edges.iter().collect();
                for i in 0..real.len() {
                    for j in i + 1..real.len() {
                        let f = EdgeSet::from_iter([real[i], real[j]]);
                        out.push((Cycle::from_edge_set(bp, &f)?, prov(GeneratorKind::Digon)));
                    }
                }
            }
            PartKind::CyclePart => {
                let mut options: Vec<Vec<EdgeId>> = node.real_edges.iter().map(|e| vec![e]).collect();
                for &k in &node.virtual_edges {
                    let (x, y) = td.tree_edges[k].pair;
                    options.push(real_options(x, y)?);
                }
                for f in expand(&options) {
                    out.push((Cycle::from_edge_set(bp, &f)?, prov(GeneratorKind::PartCycle)));
                }
            }
            PartKind::ThreeConnectedPart => {
                let tor = torso(bp, &td, t);
                let emb = Embedding::planar(&tor.graph)?;
                for face in emb.faces() {
                    let options: Vec<Vec<EdgeId>> = face
                        .boundary
                        .iter()
                        .map(|e| match tor.virtual_edges.get(&e) {
                            Some(&k) => {
                                let (x, y) = td.tree_edges[k].pair;
                                real_options(x, y)
                            }
                            None => Ok(vec![e]),
                        })
                        .collect::<Result<_>>()?;
                    for f in expand(&options) {
                        out.push((Cycle::from_edge_set(bp, &f)?, prov(GeneratorKind::FaceBoundary)));
                    }
                }
            }
        }
    }
    Ok((out, td))
}

fn embed_extension(host: &Multigraph) -> Result<Embedding> {
    Embedding::planar(host).map_err(|e| match e {
        Error::NonPlanar => invariant!("extended graph is not planar"),
        e => e,
    })
}

/// Generating set of a planar 2-connected graph, on its extension.
pub fn generate_2connected(b: &Multigraph, options: GenerateOptions) -> Result<GeneratingSet> {
    check_two_connected(b)?;
    Embedding::planar(b)?;
    let td = tutte_decomposition(b)?;
    let first = EdgeId(b.max_edge_id().map_or(1, |e| e.0 + 1));
    let (bp, added) = complete_adhesions(b, &td, first)?;
    if options.strict && !added.is_empty() {
        return Err(Error::ExtensionRequired(added.len()));
    }
    let (gens, td_prime) = block_generators(&bp, 0)?;
    let embedding = embed_extension(&bp)?;
    let block = BlockRecord {
        graph: bp.clone(),
        decomposition: Some(td_prime),
    };
    Ok(finish(bp, added, gens, vec![block], embedding))
}

/// Generating set of any planar graph, block by block. Loops are their own
/// generators; bridges contribute nothing.
pub fn generate_full(g: &Multigraph, options: GenerateOptions) -> Result<GeneratingSet> {
    Embedding::planar(g)?;
    let bd = block_decomposition(g);
    let mut next = g.max_edge_id().map_or(1, |e| e.0 + 1);
    let mut extension = vec![];
    let mut extended = vec![];
    for block in &bd.blocks {
        if block.kind == BlockKind::TwoConnected {
            let td = tutte_decomposition(&block.graph)?;
            let (bp, added) = complete_adhesions(&block.graph, &td, EdgeId(next))?;
            next += added.len() as u32;
            extension.extend(added);
            extended.push(bp);
        } else {
            extended.push(block.graph.clone());
        }
    }
    if options.strict && !extension.is_empty() {
        return Err(Error::ExtensionRequired(extension.len()));
    }
    let host = g.with_edges(&extension)?;
    let mut gens = vec![];
    let mut blocks = vec![];
    for (i, (block, bp)) in bd.blocks.iter().zip(extended).enumerate() {
        let decomposition = match block.kind {
            BlockKind::TwoConnected => {
                let (bg, td) = block_generators(&bp, i)?;
                gens.extend(bg);
                Some(td)
            }
            BlockKind::Loop => {
                let c = Cycle::from_edge_set(&bp, &bp.all_edges())?;
                gens.push((
                    c,
                    Provenance {
                        block: i,
                        part: None,
                        kind: GeneratorKind::Loop,
                    },
                ));
                None
            }
            BlockKind::Bridge => None,
        };
        blocks.push(BlockRecord {
            graph: bp,
            decomposition,
        });
    }
    let embedding = embed_extension(&host)?;
    Ok(finish(host, extension, gens, blocks, embedding))
}

/// Compares the face boundaries with the pullbacks of the dual's vertex
/// stars, and checks that the stars are pairwise nested tight cuts spanning
/// the dual's cut space.
pub fn dual_route_equivalence(g: &Multigraph) -> Result<bool> {
    let d = generate_3connected(g)?;
    let dp = build_dual(&d.embedding);
    let stars = dual_star_preimages(&dp)?;
    let faces: BTreeSet<EdgeSet> = d.edge_sets().into_iter().collect();
    let pulled: BTreeSet<EdgeSet> = stars.iter().cloned().collect();
    if faces != pulled {
        return Ok(false);
    }
    let images: Vec<EdgeSet> = stars
        .iter()
        .map(|s| image_of(&dp, s, Direction::ToDual))
        .collect::<Result<_>>()?;
    let cuts: Option<Vec<_>> = images.iter().map(|b| tight_cut_sides(&dp.dual, b)).collect();
    let Some(cuts) = cuts else {
        return Ok(false);
    };
    let nested = (0..cuts.len()).all(|i| (i + 1..cuts.len()).all(|j| cuts_nested(&cuts[i], &cuts[j])));
    Ok(nested && gf2_rank(&images) + 1 == dp.dual.vertex_count())
}

/// Generators of length at most `n`.
pub fn filtrate(d: &GeneratingSet, n: usize) -> Vec<Cycle> {
    d.cycles.iter().filter(|c| c.len() <= n).cloned().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradedVerdict {
    Holds,
    /// A circuit of length at most `n` outside the span of the filtrate.
    Counterexample(EdgeSet),
}

/// Whether the generators of length at most `n` span every circuit of
/// length at most `n`.
pub fn graded_check(d: &GeneratingSet, n: usize, budget: u64) -> Result<GradedVerdict> {
    let circuits = enumerate_circuits(&d.host, Some(n), budget)?;
    let span = Gf2Span::new(&filtrate(d, n).iter().map(|c| c.edge_set().clone()).collect::<Vec<_>>());
    Ok(match circuits.into_iter().find(|c| !span.contains(c)) {
        Some(c) => GradedVerdict::Counterexample(c),
        None => GradedVerdict::Holds,
    })
}

/// Indices of generators summing to `c`, or `None` if `c` is outside their
/// span.
pub fn express_cycle(d: &GeneratingSet, c: &EdgeSet) -> Result<Option<Vec<usize>>> {
    d.host.check_edges(c)?;
    if let Some(i) = d.cycles.iter().position(|g| g.edge_set() == c) {
        return Ok(Some(vec![i]));
    }
    Ok(in_span(&d.edge_sets(), c))
}

/// Splits `c` along a chord `e_xy` into the two cycles formed by the chord
/// and each of the two `x`–`y` paths of `c`.
pub fn split_at_adhesion(g: &Multigraph, c: &Cycle, x: VertexId, y: VertexId, e_xy: EdgeId) -> Result<(Cycle, Cycle)> {
    let e = g.edge(e_xy).ok_or(Error::ForeignEdge(e_xy))?;
    if (e.u, e.v) != (x.min(y), x.max(y)) || x == y {
        return Err(Error::NotJoining(e_xy));
    }
    if c.edge_set().contains(e_xy) {
        return Err(Error::EdgeOnCycle(e_xy));
    }
    let pos = |v: VertexId| c.vertices().iter().position(|&w| w == v).ok_or(Error::NotOnCycle(v));
    let (i, j) = (pos(x)?, pos(y)?);
    let len = c.len();
    let arc = |from: usize, to: usize| {
        let mut vs = vec![];
        let mut es = vec![];
        let mut k = from;
        while k != to {
            vs.push(c.vertices()[k]);
            es.push(c.edges()[k]);
            k = (k + 1) % len;
        }
        vs.push(c.vertices()[to]);
        es.push(e_xy);
        Cycle::new_unchecked(vs, es)
    };
    Ok((arc(i, j), arc(j, i)))
}
