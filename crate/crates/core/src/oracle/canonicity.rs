//! Randomised check that a pipeline commutes with relabelling.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::generator::{generate_2connected, generate_3connected, generate_full, GenerateOptions, GeneratingSet};
use crate::graph::{EdgeId, Multigraph, Relabeling, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    ThreeConnected,
    TwoConnected,
    Full,
}

impl Pipeline {
    pub fn run(self, g: &Multigraph) -> Result<GeneratingSet> {
        match self {
            Pipeline::ThreeConnected => generate_3connected(g),
            Pipeline::TwoConnected => generate_2connected(g, GenerateOptions::default()),
            Pipeline::Full => generate_full(g, GenerateOptions::default()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome {
    Consistent { trials: usize },
    Failure(Relabeling),
}

/// A random bijection onto fresh vertex and edge identifiers.
pub fn random_relabeling<R: Rng>(g: &Multigraph, rng: &mut R) -> Relabeling {
    let voff = rng.gen_range(0..1000u32);
    let mut vids: Vec<u32> = (1..=g.vertex_count() as u32).map(|i| i + voff).collect();
    vids.shuffle(rng);
    let eoff = rng.gen_range(0..1000u32);
    let mut eids: Vec<u32> = (1..=g.edge_count() as u32).map(|i| i + eoff).collect();
    eids.shuffle(rng);
    Relabeling {
        vertices: g.vertices().iter().zip(vids).map(|(&v, w)| (v, VertexId(w))).collect(),
        edges: g.edges().iter().zip(eids).map(|(e, f)| (e.id, EdgeId(f))).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Token {
    Real(EdgeId),
    Added(VertexId, VertexId),
}

/// Generators as sets of tokens: input edges through `alpha`, added edges
/// through their (relabelled) ends.
fn tokens(
    d: &GeneratingSet,
    input: &Multigraph,
    alpha: Option<&Relabeling>,
) -> (BTreeSet<Vec<Token>>, BTreeSet<Token>) {
    let v = |x: VertexId| alpha.map_or(x, |a| a.vertex(x).expect("input vertex"));
    let tok = |e: EdgeId| {
        if input.has_edge(e) {
            Token::Real(alpha.map_or(e, |a| a.edge(e).expect("input edge")))
        } else {
            let edge = d.host.edge(e).expect("host edge");
            let (a, b) = (v(edge.u), v(edge.v));
            Token::Added(a.min(b), a.max(b))
        }
    };
    let gens = d
        .cycles
        .iter()
        .map(|c| {
            let mut t: Vec<Token> = c.edges().iter().map(|&e| tok(e)).collect();
            t.sort();
            t
        })
        .collect();
    let ext = d.extension.iter().map(|e| tok(e.id)).collect();
    (gens, ext)
}

/// Whether `pipeline(alpha(g)) = alpha(pipeline(g))`. Failures must agree
/// too.
pub fn commutes(g: &Multigraph, pipeline: Pipeline, alpha: &Relabeling) -> Result<bool> {
    let h = g.relabel(alpha)?;
    Ok(match (pipeline.run(g), pipeline.run(&h)) {
        (Ok(d), Ok(dh)) => tokens(&d, g, Some(alpha)) == tokens(&dh, &h, None),
        (Err(a), Err(b)) => std::mem::discriminant(&a) == std::mem::discriminant(&b),
        _ => false,
    })
}

/// Runs [`commutes`] for `trials` relabellings drawn from a seeded
/// generator, stopping at the first disagreement.
pub fn canonicity_probe(g: &Multigraph, pipeline: Pipeline, trials: usize, seed: u64) -> Result<ProbeOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let alpha = random_relabeling(g, &mut rng);
        if !commutes(g, pipeline, &alpha)? {
            return Ok(ProbeOutcome::Failure(alpha));
        }
    }
    Ok(ProbeOutcome::Consistent { trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k4_faces_are_canonical() {
        assert_eq!(
            canonicity_probe(&fixtures::k4(), Pipeline::ThreeConnected, 20, 1).unwrap(),
            ProbeOutcome::Consistent { trials: 20 }
        );
    }

    #[test]
    fn two_hub_full_pipeline_is_canonical() {
        assert_eq!(
            canonicity_probe(&fixtures::two_hub_paths(4), Pipeline::Full, 20, 2).unwrap(),
            ProbeOutcome::Consistent { trials: 20 }
        );
    }

    #[test]
    fn identity_commutes() {
        let g = fixtures::theta();
        assert!(commutes(&g, Pipeline::TwoConnected, &Relabeling::identity(&g)).unwrap());
    }

    #[test]
    fn relabeling_is_bijective() {
        let g = fixtures::cube();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = random_relabeling(&g, &mut rng);
        let vs: BTreeSet<_> = a.vertices.values().collect();
        let es: BTreeSet<_> = a.edges.values().collect();
        assert_eq!((vs.len(), es.len()), (8, 12));
    }

    #[test]
    fn errors_must_match() {
        let g = fixtures::cycle(5);
        let alpha = Relabeling::identity(&g);
        assert!(commutes(&g, Pipeline::ThreeConnected, &alpha).unwrap());
    }
}
