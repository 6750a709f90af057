//! Exhaustive search for a canonical nested generating family over every
//! planar rotation system of a small graph.
//!
//! A canonical family is invariant under automorphisms, so it is a union of
//! circuit orbits. The audit tries every union in every planar embedding.

use crate::embedding::{is_genus_zero, CycleSides, Dart, Embedding, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{cycle_space_dimension, EdgeId, EdgeSet, Multigraph, VertexId};

use super::automorphism::{automorphism_group, orbits};
use super::circuits::{enumerate_circuits, DEFAULT_SEARCH_BUDGET};
use super::gf2::gf2_rank;

#[derive(Debug, Clone, Copy)]
pub struct AuditConfig {
    pub max_vertices: usize,
    pub max_degree: usize,
    pub max_rotation_systems: u64,
    pub max_orbits: usize,
    pub search_budget: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            max_vertices: 8,
            max_degree: 4,
            max_rotation_systems: 1 << 16,
            max_orbits: 16,
            search_budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

/// A planar rotation system in which no union of orbits is both nested and
/// spanning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub rotation: Vec<(VertexId, Vec<(EdgeId, u8)>)>,
    /// For each spanning union of orbits (given by orbit indices), a pair of
    /// its circuits that cross.
    pub crossings: Vec<(Vec<usize>, EdgeSet, EdgeSet)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditOutcome {
    Possible {
        rotation: Vec<(VertexId, Vec<(EdgeId, u8)>)>,
        family: Vec<EdgeSet>,
    },
    Impossible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub rotation_systems: u64,
    pub planar: usize,
    pub circuits: Vec<EdgeSet>,
    pub orbits: Vec<Vec<usize>>,
    /// One entry per planar rotation system examined without success.
    pub witnesses: Vec<EmbeddingWitness>,
    pub outcome: AuditOutcome,
}

fn permutations(items: &[Dart]) -> Vec<Vec<Dart>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = vec![];
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Darts leaving each vertex, in edge order.
fn darts_at(g: &Multigraph, v: usize) -> Vec<Dart> {
    let mut out: Vec<Dart> = vec![];
    for &e in g.incident(v) {
        let (a, b) = g.ends(e);
        let ds = if a == b {
            vec![Dart::new(e, 0), Dart::new(e, 1)]
        } else if a == v {
            vec![Dart::new(e, 0)]
        } else {
            vec![Dart::new(e, 1)]
        };
        for d in ds {
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

/// Every cyclic order at every vertex (first dart fixed).
fn local_orders(g: &Multigraph) -> Vec<Vec<Vec<Dart>>> {
    (0..g.vertex_count())
        .map(|v| {
            let darts = darts_at(g, v);
            match darts.split_first() {
                None => vec![vec![]],
                Some((&first, rest)) => permutations(rest)
                    .into_iter()
                    .map(|mut p| {
                        p.insert(0, first);
                        p
                    })
                    .collect(),
            }
        })
        .collect()
}

pub fn counterexample_audit(g: &Multigraph, config: &AuditConfig) -> Result<AuditReport> {
    if g.vertex_count() > config.max_vertices {
        return Err(Error::BudgetExceeded {
            what: "audit vertices",
            limit: config.max_vertices as u64,
        });
    }
    if (0..g.vertex_count()).any(|v| g.degree(v) > config.max_degree) {
        return Err(Error::BudgetExceeded {
            what: "audit vertex degree",
            limit: config.max_degree as u64,
        });
    }
    let locals = local_orders(g);
    let total: u64 = locals.iter().map(|l| l.len() as u64).product();
    if total > config.max_rotation_systems {
        return Err(Error::BudgetExceeded {
            what: "audit rotation systems",
            limit: config.max_rotation_systems,
        });
    }
    let circuits = enumerate_circuits(g, None, config.search_budget)?;
    let group = automorphism_group(g, config.search_budget)?;
    let orbit_list = orbits(g, &circuits, &group);
    if orbit_list.len() > config.max_orbits {
        return Err(Error::BudgetExceeded {
            what: "audit circuit orbits",
            limit: config.max_orbits as u64,
        });
    }
    let dim = cycle_space_dimension(g);
    // Spanning unions of orbits, smallest mask first.
    let spanning: Vec<(u64, Vec<usize>)> = (0u64..1 << orbit_list.len())
        .filter_map(|mask| {
            let members: Vec<usize> = (0..orbit_list.len())
                .filter(|o| mask >> o & 1 == 1)
                .flat_map(|o| orbit_list[o].iter().copied())
                .collect();
            let sets: Vec<EdgeSet> = members.iter().map(|&i| circuits[i].clone()).collect();
            (gf2_rank(&sets) == dim).then_some((mask, members))
        })
        .collect();
    let verts: Vec<Vec<usize>> = circuits
        .iter()
        .map(|c| {
            let mut vs: Vec<usize> = g
                .edge_indices(c)
                .iter()
                .flat_map(|&e| [g.ends(e).0, g.ends(e).1])
                .collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();

    let mut report = AuditReport {
        rotation_systems: total,
        planar: 0,
        circuits: circuits.clone(),
        orbits: orbit_list.clone(),
        witnesses: vec![],
        outcome: AuditOutcome::Impossible,
    };
    let mut counter = vec![0usize; locals.len()];
    for _ in 0..total {
        let orders: Vec<Vec<Dart>> = counter.iter().enumerate().map(|(v, &c)| locals[v][c].clone()).collect();
        // Advance the mixed-radix counter.
        for v in 0..counter.len() {
            counter[v] += 1;
            if counter[v] < locals[v].len() {
                break;
            }
            counter[v] = 0;
        }
        let rot = RotationSystem::new(g, orders)?;
        if !is_genus_zero(g, &rot) {
            continue;
        }
        report.planar += 1;
        let emb = Embedding::new(g.clone(), rot)?;
        let sides: Vec<CycleSides> = circuits.iter().map(|c| emb.sides(c)).collect::<Result<_>>()?;
        let cross = |i: usize, j: usize| {
            sides[i].separates(verts[j].iter().copied()) || sides[j].separates(verts[i].iter().copied())
        };
        let mut crossings = vec![];
        for (mask, members) in &spanning {
            let pair = members
                .iter()
                .enumerate()
                .find_map(|(a, &i)| members[a + 1..].iter().find(|&&j| cross(i, j)).map(|&j| (i, j)));
            let orbit_ids: Vec<usize> = (0..orbit_list.len()).filter(|o| mask >> o & 1 == 1).collect();
            match pair {
                None => {
                    report.outcome = AuditOutcome::Possible {
                        rotation: emb.rotation().to_ids(g),
                        family: members.iter().map(|&i| circuits[i].clone()).collect(),
                    };
                    return Ok(report);
                }
                Some((i, j)) => crossings.push((orbit_ids, circuits[i].clone(), circuits[j].clone())),
            }
        }
        report.witnesses.push(EmbeddingWitness {
            rotation: emb.rotation().to_ids(g),
            crossings,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn two_hub_graph_is_impossible() {
        let r = counterexample_audit(&fixtures::two_hub_paths(4), &AuditConfig::default()).unwrap();
        assert_eq!(r.rotation_systems, 36);
        assert!(r.planar > 0);
        assert_eq!(r.orbits.len(), 1);
        assert_eq!(r.orbits[0].len(), 6);
        assert_eq!(r.outcome, AuditOutcome::Impossible);
        assert_eq!(r.witnesses.len(), r.planar);
        assert!(r.witnesses.iter().all(|w| w.crossings.len() == 1));
    }

    #[test]
    fn k4_admits_faces() {
        let r = counterexample_audit(&fixtures::k4(), &AuditConfig::default()).unwrap();
        assert_eq!(r.rotation_systems, 16);
        match r.outcome {
            AuditOutcome::Possible { family, .. } => {
                assert_eq!(family.len(), 4);
                assert!(family.iter().all(|f| f.len() == 3));
            }
            AuditOutcome::Impossible => panic!("K4 has a canonical nested family"),
        }
    }

    #[test]
    fn c4_single_cycle() {
        let r = counterexample_audit(&fixtures::cycle(4), &AuditConfig::default()).unwrap();
        assert!(matches!(r.outcome, AuditOutcome::Possible { ref family, .. } if family.len() == 1));
    }

    #[test]
    fn refuses_large_inputs() {
        assert!(counterexample_audit(&fixtures::cube(), &AuditConfig::default()).is_ok());
        assert!(matches!(
            counterexample_audit(&fixtures::dodecahedron(), &AuditConfig::default()),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
