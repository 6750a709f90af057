//! Planarity testing with embedding output.
//!
//! Loops are subdivided twice and all but one edge of every parallel class
//! once, which makes the auxiliary graph simple. Each block of the auxiliary
//! graph is embedded with the path-addition method of Demoucron, Malgrange
//! and Pertuiset; block rotations are concatenated at cut vertices and the
//! subdivision vertices are contracted again.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{is_genus_zero, Dart, RotationSystem};
use crate::decomposition::biconnected_components;
use crate::error::{invariant, Error, Result};
use crate::graph::Multigraph;

/// A genus-0 rotation system for `g`, or [`Error::NonPlanar`]. The result is
/// a deterministic function of the (identifier-sorted) input.
pub fn planar_embed(g: &Multigraph) -> Result<RotationSystem> {
    let n = g.vertex_count();
    let mut aux_ends: Vec<(usize, usize)> = Vec::new();
    // For aux edges touching an original vertex: the original dart at each end.
    let mut owner: Vec<[Option<Dart>; 2]> = Vec::new();
    let mut next_vertex = n;
    let push = |a: usize, b: usize, da: Option<Dart>, db: Option<Dart>, ends: &mut Vec<_>, own: &mut Vec<_>| {
        ends.push((a, b));
        own.push([da, db]);
    };
    let mut seen_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for ei in 0..g.edge_count() {
        let (a, b) = g.ends(ei);
        let (d0, d1) = (Some(Dart::new(ei, 0)), Some(Dart::new(ei, 1)));
        if a == b {
            let (s1, s2) = (next_vertex, next_vertex + 1);
            next_vertex += 2;
            push(a, s1, d0, None, &mut aux_ends, &mut owner);
            push(s1, s2, None, None, &mut aux_ends, &mut owner);
            push(s2, a, None, d1, &mut aux_ends, &mut owner);
        } else if !seen_pairs.insert((a, b)) {
            let s = next_vertex;
            next_vertex += 1;
            push(a, s, d0, None, &mut aux_ends, &mut owner);
            push(s, b, None, d1, &mut aux_ends, &mut owner);
        } else {
            push(a, b, d0, d1, &mut aux_ends, &mut owner);
        }
    }
    let aux_rot = embed_simple(next_vertex, &aux_ends)?;
    let mut orders = vec![Vec::new(); n];
    for (v, order) in orders.iter_mut().enumerate() {
        for &ae in &aux_rot[v] {
            let (a, _) = aux_ends[ae];
            let d = if a == v { owner[ae][0] } else { owner[ae][1] };
            order.push(d.ok_or_else(|| invariant!("subdivision edge at original vertex"))?);
        }
    }
    let rot = RotationSystem::new(g, orders).map_err(|e| invariant!("contracted rotation: {e}"))?;
    if !is_genus_zero(g, &rot) {
        return Err(invariant!("embedding failed the genus-0 certificate"));
    }
    Ok(rot)
}

/// Per-vertex cyclic order of incident edge indices of a simple graph.
fn embed_simple(n: usize, ends: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
    let mut rot = vec![Vec::new(); n];
    for block in biconnected_components(n, ends) {
        if block.len() == 1 {
            let (a, b) = ends[block[0]];
            rot[a].push(block[0]);
            rot[b].push(block[0]);
            continue;
        }
        for (v, order) in embed_block(ends, &block)? {
            rot[v].extend(order);
        }
    }
    Ok(rot)
}

/// Embeds a 2-connected simple block with at least three vertices. Returns
/// the cyclic edge order at each of its vertices.
fn embed_block(ends: &[(usize, usize)], block: &[usize]) -> Result<Vec<(usize, Vec<usize>)>> {
    // Local numbering.
    let mut verts: Vec<usize> = block.iter().flat_map(|&e| [ends[e].0, ends[e].1]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let k = verts.len();
    let edges: Vec<(usize, usize)> = block.iter().map(|&e| (local[&ends[e].0], local[&ends[e].1])).collect();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let mut vin = vec![false; k];
    let mut ein = vec![false; edges.len()];
    let mut embedded_edges = 0;

    let cycle = initial_cycle(&adj)?;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        vin[a] = true;
        let e = adj[a].iter().find(|&&(w, _)| w == b).unwrap().1;
        ein[e] = true;
        embedded_edges += 1;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while embedded_edges < edges.len() {
        let fragments = fragments(&adj, &edges, &vin, &ein);
        let mut membership = vec![vec![false; k]; faces.len()];
        for (fi, f) in faces.iter().enumerate() {
            for &v in f {
                membership[fi][v] = true;
            }
        }
        let admissible: Vec<Vec<usize>> = fragments
            .iter()
            .map(|fr| {
                (0..faces.len())
                    .filter(|&fi| fr.attachments.iter().all(|&a| membership[fi][a]))
                    .collect()
            })
            .collect();
        if admissible.iter().any(|a| a.is_empty()) {
            return Err(Error::NonPlanar);
        }
        let chosen = admissible.iter().position(|a| a.len() == 1).unwrap_or(0);
        let face_index = admissible[chosen][0];
        let path = fragment_path(&adj, &fragments[chosen], &vin);
        for w in path.windows(2) {
            let e = adj[w[0]].iter().find(|&&(x, _)| x == w[1]).unwrap().1;
            ein[e] = true;
            embedded_edges += 1;
        }
        for &v in &path {
            vin[v] = true;
        }
        let face = faces.swap_remove(face_index);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }

    // Face traversal u -> v -> w means succ at v maps (v, u) to (v, w).
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); k];
    for f in &faces {
        let len = f.len();
        for i in 0..len {
            let (u, v, w) = (f[(i + len - 1) % len], f[i], f[(i + 1) % len]);
            if succ[v].insert(u, w).is_some() {
                return Err(invariant!("face orientation conflict"));
            }
        }
    }
    let mut out = Vec::with_capacity(k);
    for v in 0..k {
        let start = adj[v][0].0;
        let mut order = Vec::with_capacity(adj[v].len());
        let mut cur = start;
        loop {
            let e = adj[v].iter().find(|&&(x, _)| x == cur).unwrap().1;
            order.push(block[e]);
            cur = *succ[v]
                .get(&cur)
                .ok_or_else(|| invariant!("incomplete rotation at block vertex"))?;
            if cur == start {
                break;
            }
        }
        if order.len() != adj[v].len() {
            return Err(invariant!("rotation at block vertex is not a single cycle"));
        }
        out.push((verts[v], order));
    }
    Ok(out)
}

/// A cycle through vertex 0 and its smallest neighbour.
fn initial_cycle(adj: &[Vec<(usize, usize)>]) -> Result<Vec<usize>> {
    let (a, skip) = adj[0][0];
    let mut parent = vec![usize::MAX; adj.len()];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        if v == 0 {
            break;
        }
        for &(w, e) in &adj[v] {
            if e != skip && parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if parent[0] == usize::MAX {
        return Err(invariant!("block is not 2-connected"));
    }
    // Path a .. 0 reversed gives 0 .. a; the cycle is 0, a, ..., back to 0.
    let mut path = vec![];
    let mut v = 0;
    while v != a {
        path.push(v);
        v = parent[v];
    }
    path.push(a);
    // path = [0, x, ..., a]; traverse as 0 -> a -> ... -> x.
    let mut cycle = vec![0];
    cycle.extend(path[1..].iter().rev());
    Ok(cycle)
}

struct Fragment {
    attachments: Vec<usize>,
    /// The chord edge, or the non-embedded vertices of a component.
    chord: Option<usize>,
    inner: Vec<bool>,
}

fn fragments(adj: &[Vec<(usize, usize)>], edges: &[(usize, usize)], vin: &[bool], ein: &[bool]) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for (e, &(a, b)) in edges.iter().enumerate() {
        if !ein[e] && vin[a] && vin[b] {
            out.push(Fragment {
                attachments: vec![a.min(b), a.max(b)],
                chord: Some(e),
                inner: Vec::new(),
            });
        }
    }
    let mut seen = vec![false; k];
    for s in 0..k {
        if vin[s] || seen[s] {
            continue;
        }
        let mut inner = vec![false; k];
        let mut att = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            inner[v] = true;
            for &(w, _) in &adj[v] {
                if vin[w] {
                    att.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        out.push(Fragment {
            attachments: att,
            chord: None,
            inner,
        });
    }
    out
}

/// A path through the fragment between its two smallest attachments.
fn fragment_path(adj: &[Vec<(usize, usize)>], fr: &Fragment, vin: &[bool]) -> Vec<usize> {
    let (a, b) = (fr.attachments[0], fr.attachments[1]);
    if fr.chord.is_some() {
        return vec![a, b];
    }
    let mut parent = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    for &(w, _) in &adj[a] {
        if fr.inner[w] && parent[w] == usize::MAX {
            parent[w] = a;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        if adj[v].iter().any(|&(w, _)| w == b) {
            let mut path = vec![b];
            let mut x = v;
            while x != a {
                path.push(x);
                x = parent[x];
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &(w, _) in &adj[v] {
            if !vin[w] && fr.inner[w] && parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment component reaches every attachment")
}

/// Splits an oriented face along a path between two of its vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let ia = face.iter().position(|&v| v == a).unwrap();
    let rotated: Vec<usize> = face[ia..].iter().chain(&face[..ia]).copied().collect();
    let jb = rotated.iter().position(|&v| v == b).unwrap();
    let interior = &path[1..path.len() - 1];
    let mut f1: Vec<usize> = rotated[..=jb].to_vec();
    f1.extend(interior.iter().rev());
    let mut f2: Vec<usize> = rotated[jb..].to_vec();
    f2.push(a);
    f2.extend(interior);
    (f1, f2)
}
