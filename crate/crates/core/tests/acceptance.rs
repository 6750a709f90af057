//! Acceptance criteria A1..A10. Runs as a plain binary so that the summary
//! lines always reach the test log; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use cyclenest::decomposition::{check_td_axioms, torso, tutte_decomposition, PartKind, TutteDecomposition};
use cyclenest::duality::{build_dual, verify_duality_exhaustive, DualityConfig, DualityStrategy};
use cyclenest::embedding::{facial_invariance_check, Embedding};
use cyclenest::fixtures;
use cyclenest::generator::{
    generate_2connected, generate_3connected, generate_full, graded_check, GenerateOptions, GeneratorKind,
    GradedVerdict,
};
use cyclenest::graph::{components, cycle_space_dimension, is_circuit};
use cyclenest::nestedness::{family_nested, transfer_survey};
use cyclenest::oracle::{
    automorphism_group, canonicity_probe, counterexample_audit, enumerate_circuits, gf2_rank, is_cycle_graph,
    is_k_connected_brute, orbit_closed, AuditConfig, AuditOutcome, Pipeline, ProbeOutcome,
};
use cyclenest::{Cycle, EdgeSet, Multigraph};

const A1_LIMIT: Duration = Duration::from_secs(30);
const A2_LIMIT: Duration = Duration::from_secs(60);
const A3_LIMIT: Duration = Duration::from_secs(300);
const A4_LIMIT: Duration = Duration::from_secs(30);
const A2_MAX_EDGES: usize = 16;
const A5_TRIALS: usize = 20;
const A10_MAX_EDGES: usize = 12;
const AUT_BUDGET: u64 = 1 << 22;
const CIRCUIT_BUDGET: u64 = 1 << 28;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, ctx: &str) -> Result<T, String> {
    r.map_err(|e| format!("{ctx}: {e}"))
}

fn circuits_of(g: &Multigraph) -> Result<Vec<EdgeSet>, String> {
    ok(enumerate_circuits(g, None, CIRCUIT_BUDGET), "circuit enumeration")
}

fn all_fixtures() -> Vec<(String, Multigraph)> {
    let mut out = fixtures::three_connected_family();
    out.extend(fixtures::two_connected_family());
    for (name, g) in [
        ("K5", fixtures::k5()),
        ("K3,3", fixtures::k33()),
        ("octahedron", fixtures::octahedron()),
        ("C5", fixtures::cycle(5)),
        ("P4", fixtures::path(4)),
        ("digon", fixtures::digon()),
        ("bowtie", fixtures::bowtie()),
        ("triangle-with-loop", fixtures::triangle_with_loop()),
        ("loops-and-bridges", fixtures::loops_and_bridges()),
        ("forest", fixtures::forest()),
    ] {
        out.push((name.to_string(), g));
    }
    out
}

fn a1() -> Outcome {
    let start = Instant::now();
    let family = fixtures::three_connected_family();
    for (name, g) in &family {
        let (n, m) = (g.vertex_count(), g.edge_count());
        let d = ok(generate_3connected(g), name)?;
        ensure(d.len() == 2 + m - n, || {
            format!("{name}: {} generators, expected {}", d.len(), 2 + m - n)
        })?;
        let nested = ok(family_nested(&d.embedding, &d.cycles), name)?;
        ensure(nested.is_nested(), || format!("{name}: {nested:?}"))?;
        ensure(d.rank() == m + 1 - n, || format!("{name}: rank {}", d.rank()))?;
        let group = ok(automorphism_group(g, AUT_BUDGET), name)?;
        ensure(orbit_closed(g, &d.edge_sets(), &group), || {
            format!("{name}: not orbit closed")
        })?;
        let total = d.edge_sets().iter().fold(EdgeSet::new(), |acc, f| acc.sum(f));
        ensure(total.is_empty(), || format!("{name}: generators sum to {total}"))?;
    }
    let t = start.elapsed();
    ensure(t < A1_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("{} fixtures in {t:.2?}", family.len()))
}

fn a2() -> Outcome {
    let start = Instant::now();
    let config = DualityConfig {
        edge_budget: A2_MAX_EDGES,
        strategy: DualityStrategy::AllSubsets,
        ..DualityConfig::default()
    };
    let mut checked = vec![];
    for (name, g) in fixtures::three_connected_family() {
        if g.edge_count() > A2_MAX_EDGES {
            continue;
        }
        let dp = build_dual(&ok(Embedding::planar(&g), &name)?);
        let r = ok(verify_duality_exhaustive(&dp, &config), &name)?;
        ensure(r.holds(), || format!("{name}: {} violations", r.violations.len()))?;
        ensure(r.circuits == r.tight_cuts, || {
            format!("{name}: {} circuits vs {} cuts", r.circuits, r.tight_cuts)
        })?;
        if name == "K4" {
            ensure(r.circuits == 7 && r.tight_cuts == 7, || {
                format!("K4: {} <-> {}", r.circuits, r.tight_cuts)
            })?;
        }
        checked.push(format!("{name} {}<->{}", r.circuits, r.tight_cuts));
    }
    let t = start.elapsed();
    ensure(t < A2_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("{} in {t:.2?}", checked.join(", ")))
}

fn a3() -> Outcome {
    let start = Instant::now();
    let mut family = fixtures::three_connected_family();
    family.extend(fixtures::two_connected_family());
    let (mut pairs, mut converse, mut asym) = (0usize, 0usize, 0usize);
    for (name, g) in &family {
        let cs: Vec<Cycle> = circuits_of(g)?
            .iter()
            .map(|f| Cycle::from_edge_set(g, f))
            .collect::<Result<_, _>>()
            .map_err(|e| format!("{name}: {e}"))?;
        let dp = build_dual(&ok(Embedding::planar(g), name)?);
        let s = ok(transfer_survey(&dp, &cs), name)?;
        if let Some((c, d)) = s.implication_failures.first() {
            return Err(format!("{name}: dual cuts of {c} and {d} nested, cycles cross"));
        }
        println!(
            "    {name}: {} circuits, {} pairs, converse failures {} ({:.1}%), one-sided crossings {}",
            cs.len(),
            s.pairs,
            s.converse_failures,
            100.0 * s.converse_failures as f64 / s.pairs as f64,
            s.asymmetric
        );
        pairs += s.pairs;
        converse += s.converse_failures;
        asym += s.asymmetric;
    }
    let t = start.elapsed();
    ensure(t < A3_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "{pairs} pairs, 0 implication failures, {converse} converse failures, {asym} one-sided, {t:.2?}"
    ))
}

fn a4() -> Outcome {
    let start = Instant::now();
    let g = fixtures::two_hub_paths(4);
    let r = ok(counterexample_audit(&g, &AuditConfig::default()), "two-hub audit")?;
    ensure(r.rotation_systems == 36, || {
        format!("{} rotation systems", r.rotation_systems)
    })?;
    ensure(
        r.circuits.len() == 6 && r.orbits.len() == 1 && r.orbits[0].len() == 6,
        || format!("{} circuits in orbits {:?}", r.circuits.len(), r.orbits),
    )?;
    ensure(r.planar > 0 && r.witnesses.len() == r.planar, || {
        format!("{} planar systems, {} witnesses", r.planar, r.witnesses.len())
    })?;
    for w in &r.witnesses {
        let covers_orbit = w.crossings.iter().any(|(u, _, _)| u == &[0]);
        ensure(covers_orbit, || {
            format!("no crossing pair recorded in the orbit for {:?}", w.rotation)
        })?;
    }
    ensure(r.outcome == AuditOutcome::Impossible, || format!("{:?}", r.outcome))?;

    let k4 = fixtures::k4();
    let rk = ok(counterexample_audit(&k4, &AuditConfig::default()), "K4 audit")?;
    let AuditOutcome::Possible { rotation, family } = &rk.outcome else {
        return Err("K4 audit found no nested spanning family".into());
    };
    let emb = ok(
        cyclenest::embedding::RotationSystem::from_ids(&k4, rotation).and_then(|rot| Embedding::new(k4.clone(), rot)),
        "K4 rotation",
    )?;
    let faces: BTreeSet<EdgeSet> = emb.faces().iter().map(|f| f.boundary.clone()).collect();
    let fam: BTreeSet<EdgeSet> = family.iter().cloned().collect();
    ensure(fam == faces, || format!("K4 family {fam:?} is not the facial family"))?;
    let t = start.elapsed();
    ensure(t < A4_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "two-hub: 36 systems, {} planar, all crossed, Impossible; K4: Possible with {} faces; {t:.2?}",
        r.planar,
        fam.len()
    ))
}

fn a5() -> Outcome {
    let family = fixtures::two_connected_family();
    for (i, (name, g)) in family.iter().enumerate() {
        let d = ok(generate_2connected(g, GenerateOptions::default()), name)?;
        ok(Embedding::planar(&d.host), &format!("{name}: G' planarity"))?;
        let v = ok(d.verify(), name)?;
        ensure(v.holds(), || format!("{name}: {v:?}"))?;
        ensure(v.dimension == cycle_space_dimension(&d.host), || {
            format!("{name}: dimension")
        })?;
        let probe = ok(
            canonicity_probe(g, Pipeline::TwoConnected, A5_TRIALS, 1000 + i as u64),
            name,
        )?;
        ensure(matches!(probe, ProbeOutcome::Consistent { .. }), || {
            format!("{name}: {probe:?}")
        })?;
    }
    Ok(format!("{} fixtures, {A5_TRIALS} relabelings each", family.len()))
}

fn check_decomposition(name: &str, g: &Multigraph, td: &TutteDecomposition) -> Result<(), String> {
    check_td_axioms(g, &td.tree_decomposition(), Some(2)).map_err(|v| format!("{name}: {v:?}"))?;
    for t in 0..td.nodes.len() {
        let h = torso(g, td, t).graph;
        let good = match td.nodes[t].kind {
            PartKind::ThreeConnectedPart => h.is_simple() && is_k_connected_brute(&h, 3),
            PartKind::CyclePart => is_cycle_graph(&h),
            PartKind::BondPart => h.vertex_count() == 2 && h.edge_count() >= 3,
            PartKind::EdgePart => h.vertex_count() == 2 && h.edge_count() >= 1,
        };
        ensure(good, || format!("{name}: node {t} is not a {:?}", td.nodes[t].kind))?;
    }
    Ok(())
}

fn a6() -> Outcome {
    let family = fixtures::two_connected_family();
    for (name, g) in &family {
        let td = ok(tutte_decomposition(g), name)?;
        check_decomposition(name, g, &td)?;
        let host = ok(generate_2connected(g, GenerateOptions::default()), name)?.host;
        let td2 = ok(tutte_decomposition(&host), name)?;
        check_decomposition(&format!("{name}'"), &host, &td2)?;
    }
    let td = ok(tutte_decomposition(&fixtures::two_hub_paths(4)), "two-hub")?;
    let (bonds, cycles) = (td.count(PartKind::BondPart), td.count(PartKind::CyclePart));
    ensure(td.nodes.len() == 5 && bonds == 1 && cycles == 4, || {
        format!("two-hub: {} nodes, {bonds} bonds, {cycles} cycles", td.nodes.len())
    })?;
    Ok(format!(
        "{} fixtures and their extensions; two-hub = 1 bond + 4 cycles",
        family.len()
    ))
}

fn a7() -> Outcome {
    let mut autos = 0;
    let family = fixtures::three_connected_family();
    for (name, g) in &family {
        let group = ok(automorphism_group(g, AUT_BUDGET), name)?;
        let emb = ok(Embedding::planar(g), name)?;
        ensure(facial_invariance_check(g, emb.rotation(), group.elements()), || {
            format!("{name}: faces not invariant")
        })?;
        autos += group.order();
    }
    Ok(format!("{} fixtures, {autos} automorphisms", family.len()))
}

fn a8() -> Outcome {
    let opts = GenerateOptions::default();
    let bowtie = ok(generate_full(&fixtures::bowtie(), opts), "bowtie")?;
    let v = ok(bowtie.verify(), "bowtie")?;
    ensure(bowtie.len() == 2 && v.holds() && v.rank == 2, || {
        format!("bowtie: {} generators, {v:?}", bowtie.len())
    })?;

    let forest = ok(generate_full(&fixtures::forest(), opts), "forest")?;
    ensure(forest.is_empty(), || format!("forest: {} generators", forest.len()))?;

    let g = fixtures::loops_and_bridges();
    let d = ok(generate_full(&g, opts), "loops-and-bridges")?;
    let v = ok(d.verify(), "loops-and-bridges")?;
    ensure(v.holds(), || format!("loops-and-bridges: {v:?}"))?;
    let loops: BTreeSet<EdgeSet> = g
        .edges()
        .iter()
        .filter(|e| e.is_loop())
        .map(|e| [e.id].into_iter().collect())
        .collect();
    let emitted: BTreeSet<EdgeSet> = d
        .cycles
        .iter()
        .zip(&d.provenance)
        .filter(|(_, p)| p.kind == GeneratorKind::Loop)
        .map(|(c, _)| c.edge_set().clone())
        .collect();
    ensure(emitted == loops, || format!("loops emitted {emitted:?}"))?;
    let parts = components(&g).len();
    for e in g.edges() {
        let bridge = components(&g.without_edges(&[e.id].into_iter().collect())).len() > parts;
        if bridge {
            ensure(d.cycles.iter().all(|c| !c.edge_set().contains(e.id)), || {
                format!("bridge {} used", e.id)
            })?;
        }
    }
    ensure(v.rank == cycle_space_dimension(&g), || {
        format!("rank {} vs {}", v.rank, cycle_space_dimension(&g))
    })?;
    Ok(format!(
        "bowtie 2 generators rank 2; forest empty; {} loops, rank {}",
        loops.len(),
        v.rank
    ))
}

fn a9() -> Outcome {
    let mut findings = vec![];
    let mut checks = 0;
    for (name, g) in fixtures::three_connected_family() {
        let d = ok(generate_3connected(&g), &name)?;
        for n in 3..=5 {
            checks += 1;
            match ok(graded_check(&d, n, CIRCUIT_BUDGET), &name)? {
                GradedVerdict::Holds => {}
                GradedVerdict::Counterexample(c) => {
                    println!(
                        "    finding: {name}, n = {n}: circuit {c} outside the span of generators of length <= {n}"
                    );
                    findings.push(format!("{name}/{n}"));
                }
            }
        }
    }
    Ok(format!(
        "{checks} checks, {} counterexample(s) reported as findings",
        findings.len()
    ))
}

fn a10() -> Outcome {
    let mut crossed = 0;
    let fixtures = all_fixtures();
    for (name, g) in &fixtures {
        let circuits = circuits_of(g)?;
        let m = g.edge_count();
        if m <= A10_MAX_EDGES {
            let found: BTreeSet<EdgeSet> = circuits.iter().cloned().collect();
            ensure(found.len() == circuits.len(), || format!("{name}: duplicate circuits"))?;
            let ids: Vec<_> = g.edges().iter().map(|e| e.id).collect();
            for mask in 0u32..1 << m {
                let f: EdgeSet = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
                let c = ok(is_circuit(g, &f), name)?;
                ensure(c == found.contains(&f), || format!("{name}: disagreement on {f}"))?;
            }
            crossed += 1;
        }
        let expected = m + components(g).len() - g.vertex_count();
        let rank = gf2_rank(&circuits);
        ensure(rank == expected, || format!("{name}: rank {rank}, expected {expected}"))?;
    }
    Ok(format!(
        "{} fixtures ranked, {crossed} cross-checked over all edge subsets",
        fixtures.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("A1 face-boundary generators", a1),
        ("A2 duality condition", a2),
        ("A3 cut-to-cycle nestedness transfer", a3),
        ("A4 two-hub counterexample", a4),
        ("A5 2-connected pipeline", a5),
        ("A6 Tutte decomposition soundness", a6),
        ("A7 facial invariance", a7),
        ("A8 lift to arbitrary graphs", a8),
        ("A9 graded survey", a9),
        ("A10 oracle self-consistency", a10),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("{name}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("{name}: FAIL ({why})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
