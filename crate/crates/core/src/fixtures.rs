//! Named graphs and seeded random planar graph generators used by the test
//! suites and the CLI examples.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Multigraph;

fn build(n: u32, pairs: &[(u32, u32)]) -> Multigraph {
    Multigraph::from_pairs(n, pairs).expect("fixture is well formed")
}

/// `K4` with edges `e1=12 e2=13 e3=14 e4=23 e5=24 e6=34`.
pub fn k4() -> Multigraph {
    build(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
}

pub fn k5() -> Multigraph {
    let mut pairs = vec![];
    for a in 1..=5 {
        for b in a + 1..=5 {
            pairs.push((a, b));
        }
    }
    build(5, &pairs)
}

pub fn k33() -> Multigraph {
    let mut pairs = vec![];
    for a in 1..=3 {
        for b in 4..=6 {
            pairs.push((a, b));
        }
    }
    build(6, &pairs)
}

/// Triangular prism: triangles 123 and 456 joined by 14, 25, 36.
pub fn prism() -> Multigraph {
    build(
        6,
        &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)],
    )
}

/// The 3-cube: squares 1234 and 5678 joined by `i -- i+4`.
pub fn cube() -> Multigraph {
    build(
        8,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 5),
            (1, 5),
            (2, 6),
            (3, 7),
            (4, 8),
        ],
    )
}

pub fn octahedron() -> Multigraph {
    let mut pairs = vec![];
    for a in 1..=6u32 {
        for b in a + 1..=6 {
            // antipodal pairs 12, 34, 56
            if !(a % 2 == 1 && b == a + 1) {
                pairs.push((a, b));
            }
        }
    }
    build(6, &pairs)
}

pub fn dodecahedron() -> Multigraph {
    let mut pairs = vec![];
    for i in 0..5u32 {
        pairs.push((1 + i, 1 + (i + 1) % 5));
        pairs.push((1 + i, 6 + 2 * i));
        pairs.push((16 + i, 7 + 2 * i));
        pairs.push((16 + i, 16 + (i + 1) % 5));
    }
    for i in 0..10u32 {
        pairs.push((6 + i, 6 + (i + 1) % 10));
    }
    build(20, &pairs)
}

/// Wheel with `rim` rim vertices: hub 1, rim `2..=rim+1`.
pub fn wheel(rim: u32) -> Multigraph {
    let mut pairs = vec![];
    for i in 0..rim {
        pairs.push((1, 2 + i));
        pairs.push((2 + i, 2 + (i + 1) % rim));
    }
    build(rim + 1, &pairs)
}

pub fn cycle(n: u32) -> Multigraph {
    let pairs: Vec<_> = (0..n).map(|i| (1 + i, 1 + (i + 1) % n)).collect();
    build(n, &pairs)
}

/// Path on `n` vertices.
pub fn path(n: u32) -> Multigraph {
    let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    build(n, &pairs)
}

pub fn digon() -> Multigraph {
    build(2, &[(1, 2), (1, 2)])
}

/// Two triangles 123 and 345 sharing vertex 3.
pub fn bowtie() -> Multigraph {
    build(5, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])
}

/// Hubs `x = 1`, `y = 2` joined by `k` paths of length two through the
/// midpoints `3..`; path `i` uses edges `2i-1 = x m_i` and `2i = m_i y`.
pub fn two_hub_paths(k: u32) -> Multigraph {
    let mut pairs = vec![];
    for i in 0..k {
        pairs.push((1, 3 + i));
        pairs.push((3 + i, 2));
    }
    build(k + 2, &pairs)
}

/// Two vertices joined by three paths of length two.
pub fn theta() -> Multigraph {
    two_hub_paths(3)
}

pub fn triangle_with_loop() -> Multigraph {
    build(3, &[(1, 2), (2, 3), (3, 1), (1, 1)])
}

/// Triangle 123, bridge 34, square 4567, bridge 78, pendant 29 and loops at
/// 5 and 8.
pub fn loops_and_bridges() -> Multigraph {
    build(
        9,
        &[
            (1, 2),
            (2, 3),
            (3, 1),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (7, 8),
            (8, 8),
            (5, 5),
            (2, 9),
        ],
    )
}

/// A forest: a path on four vertices and a star with three leaves.
pub fn forest() -> Multigraph {
    build(8, &[(1, 2), (2, 3), (3, 4), (5, 6), (5, 7), (5, 8)])
}

/// A random maximal planar graph on `n >= 4` vertices: stacked vertex
/// insertions followed by random edge flips.
pub fn random_triangulation(n: u32, seed: u64) -> Multigraph {
    assert!(n >= 4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<[u32; 3]> = vec![[1, 2, 3], [1, 4, 2], [2, 4, 3], [3, 4, 1]];
    let mut edges: BTreeSet<(u32, u32)> = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)].into();
    let key = |a: u32, b: u32| (a.min(b), a.max(b));
    for v in 5..=n {
        let fi = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(fi);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
        edges.extend([key(a, v), key(b, v), key(c, v)]);
    }
    let degree = |edges: &BTreeSet<(u32, u32)>, x: u32| edges.iter().filter(|&&(p, q)| p == x || q == x).count();
    for _ in 0..3 * n {
        let list: Vec<(u32, u32)> = edges.iter().copied().collect();
        let (a, b) = *list.choose(&mut rng).unwrap();
        let around: Vec<usize> = (0..faces.len())
            .filter(|&i| faces[i].contains(&a) && faces[i].contains(&b))
            .collect();
        if around.len() != 2 {
            continue;
        }
        let third = |f: [u32; 3]| *f.iter().find(|&&x| x != a && x != b).unwrap();
        let (c, d) = (third(faces[around[0]]), third(faces[around[1]]));
        if c == d || edges.contains(&key(c, d)) || degree(&edges, a) <= 3 || degree(&edges, b) <= 3 {
            continue;
        }
        edges.remove(&key(a, b));
        edges.insert(key(c, d));
        faces[around[0]] = [a, c, d];
        faces[around[1]] = [b, c, d];
    }
    let pairs: Vec<(u32, u32)> = edges.into_iter().collect();
    build(n, &pairs)
}

/// A random simple 2-connected planar graph on `n >= 3` vertices, grown by
/// adding ears inside faces of a cycle.
pub fn random_two_connected_planar(n: u32, seed: u64) -> Multigraph {
    assert!(n >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = rng.gen_range(3..=n.min(5));
    let cyc: Vec<u32> = (1..=start).collect();
    let mut faces: Vec<Vec<u32>> = vec![cyc.clone(), cyc.iter().rev().copied().collect()];
    let mut edges: BTreeSet<(u32, u32)> = (0..start)
        .map(|i| {
            let (a, b) = (cyc[i as usize], cyc[((i + 1) % start) as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut next = start + 1;
    let mut chords = 0;
    let max_chords = n / 3;
    let mut attempts = 0;
    while (next <= n || chords < max_chords) && attempts < 1000 {
        attempts += 1;
        let fi = rng.gen_range(0..faces.len());
        let f = faces[fi].clone();
        let i = rng.gen_range(0..f.len());
        let j = rng.gen_range(0..f.len());
        if i == j {
            continue;
        }
        let (a, b) = (f[i], f[j]);
        let remaining = (n + 1).saturating_sub(next);
        let len = if remaining == 0 {
            0
        } else {
            rng.gen_range(0..=remaining.min(2))
        };
        if len == 0 {
            if chords >= max_chords || edges.contains(&(a.min(b), a.max(b))) {
                continue;
            }
            chords += 1;
        }
        let mut path = vec![a];
        for _ in 0..len {
            path.push(next);
            next += 1;
        }
        path.push(b);
        for w in path.windows(2) {
            edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        let ia = f.iter().position(|&v| v == a).unwrap();
        let rotated: Vec<u32> = f[ia..].iter().chain(&f[..ia]).copied().collect();
        let jb = rotated.iter().position(|&v| v == b).unwrap();
        let interior = &path[1..path.len() - 1];
        let mut f1 = rotated[..=jb].to_vec();
        f1.extend(interior.iter().rev());
        let mut f2 = rotated[jb..].to_vec();
        f2.push(a);
        f2.extend(interior);
        faces[fi] = f1;
        faces.push(f2);
    }
    let pairs: Vec<(u32, u32)> = edges.into_iter().collect();
    build(next - 1, &pairs)
}

/// The 3-connected fixture family: K4, prism, cube, dodecahedron, wheels
/// W4..W8 and five random triangulations with at most 14 vertices.
pub fn three_connected_family() -> Vec<(String, Multigraph)> {
    let mut out = vec![
        ("K4".to_string(), k4()),
        ("prism".to_string(), prism()),
        ("cube".to_string(), cube()),
        ("dodecahedron".to_string(), dodecahedron()),
    ];
    for rim in 4..=8 {
        out.push((format!("W{rim}"), wheel(rim)));
    }
    for (i, n) in [6u32, 8, 10, 12, 14].into_iter().enumerate() {
        out.push((
            format!("triangulation-{n}-s{i}"),
            random_triangulation(n, 100 + i as u64),
        ));
    }
    out
}

/// The 2-connected fixture family: theta, the two-hub four-path graph, C4 and
/// ten random 2-connected planar graphs with at most 14 vertices.
pub fn two_connected_family() -> Vec<(String, Multigraph)> {
    let mut out = vec![
        ("theta".to_string(), theta()),
        ("two-hub-4-paths".to_string(), two_hub_paths(4)),
        ("C4".to_string(), cycle(4)),
    ];
    for i in 0..10u32 {
        let n = 5 + i;
        out.push((
            format!("random-2c-{n}-s{i}"),
            random_two_connected_planar(n, 200 + i as u64),
        ));
    }
    out
}
