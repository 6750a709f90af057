//! Nestedness of cuts and of embedded cycles, and the transfer from nested
//! dual cuts to nested primal cycles.

use std::collections::BTreeSet;

use crate::duality::{image_of, tight_cut_sides, Direction, DualPair};
use crate::embedding::{CycleSides, Embedding, Side};
use crate::error::{invariant, Result};
use crate::graph::{Cut, Cycle, EdgeSet, Multigraph, VertexId};

/// Two cuts are nested if one of the four corners `X1∩X2`, `X1∩Y2`,
/// `Y1∩X2`, `Y1∩Y2` is empty.
pub fn cuts_nested(b1: &Cut, b2: &Cut) -> bool {
    let disjoint = |a: &BTreeSet<VertexId>, b: &BTreeSet<VertexId>| a.is_disjoint(b);
    disjoint(&b1.side_x, &b2.side_x)
        || disjoint(&b1.side_x, &b2.side_y)
        || disjoint(&b1.side_y, &b2.side_x)
        || disjoint(&b1.side_y, &b2.side_y)
}

fn vertex_indices(g: &Multigraph, c: &Cycle) -> Vec<usize> {
    c.vertices().iter().filter_map(|&v| g.vertex_index(v)).collect()
}

/// Whether `d` has vertices strictly on both sides of `c`.
pub fn crosses(emb: &Embedding, c: &Cycle, d: &Cycle) -> Result<bool> {
    let sides = emb.sides(c.edge_set())?;
    Ok(sides.separates(vertex_indices(emb.graph(), d)))
}

/// Neither cycle has vertices strictly on both sides of the other.
pub fn cycles_nested(emb: &Embedding, c: &Cycle, d: &Cycle) -> Result<bool> {
    Ok(!crosses(emb, c, d)? && !crosses(emb, d, c)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyVerdict {
    Nested,
    /// The lexicographically first pair `(i, j)`, `i < j`, that crosses.
    FirstViolation(usize, usize),
}

impl FamilyVerdict {
    pub fn is_nested(&self) -> bool {
        matches!(self, FamilyVerdict::Nested)
    }
}

/// Checks all unordered pairs of a family of cycles.
pub fn family_nested(emb: &Embedding, family: &[Cycle]) -> Result<FamilyVerdict> {
    let g = emb.graph();
    let sides: Vec<CycleSides> = family.iter().map(|c| emb.sides(c.edge_set())).collect::<Result<_>>()?;
    let verts: Vec<Vec<usize>> = family.iter().map(|c| vertex_indices(g, c)).collect();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if sides[i].separates(verts[j].iter().copied()) || sides[j].separates(verts[i].iter().copied()) {
                return Ok(FamilyVerdict::FirstViolation(i, j));
            }
        }
    }
    Ok(FamilyVerdict::Nested)
}

/// The bipartition of the dual belonging to the image of a primal circuit.
pub fn dual_cut(dp: &DualPair, c: &Cycle) -> Result<Cut> {
    let image = image_of(dp, c.edge_set(), Direction::ToDual)?;
    tight_cut_sides(&dp.dual, &image)
        .ok_or_else(|| invariant!("image of circuit {} is not a tight cut of the dual", c.edge_set()))
}

/// Truth value of "the dual cuts of `c1` and `c2` are nested implies `c1`
/// and `c2` are nested".
pub fn transfer_holds(dp: &DualPair, c1: &Cycle, c2: &Cycle) -> Result<bool> {
    let cuts = cuts_nested(&dual_cut(dp, c1)?, &dual_cut(dp, c2)?);
    Ok(!cuts || cycles_nested(&dp.embedding, c1, c2)?)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransferSurvey {
    pub pairs: usize,
    pub cuts_nested: usize,
    pub cycles_nested: usize,
    /// Cuts nested but cycles not.
    pub implication_failures: Vec<(EdgeSet, EdgeSet)>,
    /// Cycles nested but cuts not.
    pub converse_failures: usize,
    /// Pairs where exactly one of the two one-sided crossing tests fires.
    pub asymmetric: usize,
}

/// Bitset over vertex indices.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn meets(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }
}

fn bits_of<'a>(n: usize, it: impl IntoIterator<Item = &'a usize>) -> Bits {
    let mut b = Bits::new(n);
    for &i in it {
        b.set(i);
    }
    b
}

/// Runs the transfer over every unordered pair of `circuits` (including a
/// circuit with itself).
pub fn transfer_survey(dp: &DualPair, circuits: &[Cycle]) -> Result<TransferSurvey> {
    let emb = &dp.embedding;
    let g = emb.graph();
    let (n, f) = (g.vertex_count(), dp.dual.vertex_count());
    // Dual cut sides over face indices.
    let mut cut_x = vec![];
    let mut cut_y = vec![];
    for c in circuits {
        let cut = dual_cut(dp, c)?;
        let idx = |s: &BTreeSet<VertexId>| {
            s.iter()
                .map(|&v| dp.dual.vertex_index(v).expect("dual vertex"))
                .collect::<Vec<_>>()
        };
        cut_x.push(bits_of(f, &idx(&cut.side_x)));
        cut_y.push(bits_of(f, &idx(&cut.side_y)));
    }
    let mut side_a = vec![];
    let mut side_b = vec![];
    let mut on = vec![];
    for c in circuits {
        let sides = emb.sides(c.edge_set())?;
        let pick = |want: Side| {
            (0..n)
                .filter(|&v| sides.side_of_index(v) == Some(want))
                .collect::<Vec<_>>()
        };
        side_a.push(bits_of(n, &pick(Side::SideA)));
        side_b.push(bits_of(n, &pick(Side::SideB)));
        on.push(bits_of(n, &vertex_indices(g, c)));
    }
    let crosses = |i: usize, j: usize| on[j].meets(&side_a[i]) && on[j].meets(&side_b[i]);
    let mut s = TransferSurvey::default();
    for i in 0..circuits.len() {
        for j in i..circuits.len() {
            s.pairs += 1;
            let cn = !cut_x[i].meets(&cut_x[j])
                || !cut_x[i].meets(&cut_y[j])
                || !cut_y[i].meets(&cut_x[j])
                || !cut_y[i].meets(&cut_y[j]);
            let (ij, ji) = (crosses(i, j), crosses(j, i));
            let yn = !ij && !ji;
            s.cuts_nested += cn as usize;
            s.cycles_nested += yn as usize;
            if cn && !yn {
                s.implication_failures
                    .push((circuits[i].edge_set().clone(), circuits[j].edge_set().clone()));
            }
            if yn && !cn {
                s.converse_failures += 1;
            }
            if ij != ji {
                s.asymmetric += 1;
            }
        }
    }
    Ok(s)
}
