//! Brute-force automorphism groups of small multigraphs, including the edge
//! bijections over parallel classes.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Multigraph, VertexId};

/// A vertex permutation with a compatible edge bijection, both on indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

impl Automorphism {
    pub fn identity(g: &Multigraph) -> Automorphism {
        Automorphism {
            vertex_map: (0..g.vertex_count()).collect(),
            edge_map: (0..g.edge_count()).collect(),
        }
    }

    pub fn vertex(&self, g: &Multigraph, v: VertexId) -> Option<VertexId> {
        g.vertex_index(v).map(|i| g.vertices()[self.vertex_map[i]])
    }

    pub fn edge(&self, g: &Multigraph, e: EdgeId) -> Option<EdgeId> {
        g.edge_index(e).map(|i| g.edges()[self.edge_map[i]].id)
    }

    pub fn apply_edge_set(&self, g: &Multigraph, f: &EdgeSet) -> EdgeSet {
        f.iter().filter_map(|e| self.edge(g, e)).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            vertex_map: other.vertex_map.iter().map(|&v| self.vertex_map[v]).collect(),
            edge_map: other.edge_map.iter().map(|&e| self.edge_map[e]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut vertex_map = vec![0; self.vertex_map.len()];
        for (i, &v) in self.vertex_map.iter().enumerate() {
            vertex_map[v] = i;
        }
        let mut edge_map = vec![0; self.edge_map.len()];
        for (i, &e) in self.edge_map.iter().enumerate() {
            edge_map[e] = i;
        }
        Automorphism { vertex_map, edge_map }
    }

    /// Whether the maps are bijections preserving incidence.
    pub fn is_valid(&self, g: &Multigraph) -> bool {
        if self.vertex_map.len() != g.vertex_count() || self.edge_map.len() != g.edge_count() {
            return false;
        }
        let mut vs = self.vertex_map.clone();
        vs.sort_unstable();
        let mut es = self.edge_map.clone();
        es.sort_unstable();
        if vs.iter().enumerate().any(|(i, &v)| i != v) || es.iter().enumerate().any(|(i, &e)| i != e) {
            return false;
        }
        (0..g.edge_count()).all(|e| {
            let (a, b) = g.ends(e);
            let (x, y) = g.ends(self.edge_map[e]);
            let (p, q) = (self.vertex_map[a], self.vertex_map[b]);
            (p, q) == (x, y) || (q, p) == (x, y)
        })
    }
}

#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    elements: Vec<Automorphism>,
}

impl AutomorphismGroup {
    /// The group containing only the identity.
    pub fn trivial(g: &Multigraph) -> AutomorphismGroup {
        AutomorphismGroup {
            elements: vec![Automorphism::identity(g)],
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    /// Checks identity, closure under composition and inverses, and that
    /// every element is an automorphism of `g`.
    pub fn satisfies_group_axioms(&self, g: &Multigraph) -> bool {
        let set: std::collections::HashSet<&Automorphism> = self.elements.iter().collect();
        set.contains(&Automorphism::identity(g))
            && self
                .elements
                .iter()
                .all(|a| a.is_valid(g) && set.contains(&a.inverse()))
            && self
                .elements
                .iter()
                .all(|a| self.elements.iter().all(|b| set.contains(&a.compose(b))))
    }
}

/// The full automorphism group by backtracking over vertex images in BFS
/// order, pruned by degree, loop count and edge multiplicity towards every
/// already mapped vertex. `budget` caps search nodes plus group elements.
pub fn automorphism_group(g: &Multigraph, budget: u64) -> Result<AutomorphismGroup> {
    let n = g.vertex_count();
    let mut mult: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in 0..g.edge_count() {
        let (a, b) = g.ends(e);
        *mult[a].entry(b).or_default() += 1;
        if a != b {
            *mult[b].entry(a).or_default() += 1;
        }
    }
    for v in 0..n {
        nbrs[v] = mult[v].keys().copied().filter(|&w| w != v).collect();
    }
    let m = |a: usize, b: usize| mult[a].get(&b).copied().unwrap_or(0);

    // BFS order with an already-placed neighbour as anchor.
    let mut order: Vec<(usize, Option<usize>)> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for root in 0..n {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        order.push((root, None));
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &nbrs[v] {
                if !placed[w] {
                    placed[w] = true;
                    order.push((w, Some(v)));
                    queue.push_back(w);
                }
            }
        }
    }

    let mut spent: u64 = 0;
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut cursor = vec![0usize; n];
    let mut depth = 0usize;
    if n == 0 {
        perms.push(vec![]);
    } else {
        candidates[0] = (0..n).collect();
    }
    // Iterative backtracking over positions of `order`.
    while depth < n {
        if cursor[depth] >= candidates[depth].len() {
            if depth == 0 {
                break;
            }
            depth -= 1;
            let (v, _) = order[depth];
            used[image[v]] = false;
            image[v] = usize::MAX;
            continue;
        }
        let c = candidates[depth][cursor[depth]];
        cursor[depth] += 1;
        let (v, _) = order[depth];
        if used[c] || g.degree(c) != g.degree(v) || m(c, c) != m(v, v) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&(w, _)| m(v, w) == m(c, image[w]));
        if !consistent {
            continue;
        }
        spent += 1;
        if spent > budget {
            return Err(Error::BudgetExceeded {
                what: "automorphism search",
                limit: budget,
            });
        }
        image[v] = c;
        used[c] = true;
        if depth + 1 == n {
            perms.push(image.clone());
            used[c] = false;
            image[v] = usize::MAX;
            continue;
        }
        depth += 1;
        candidates[depth] = match order[depth].1 {
            Some(anchor) => nbrs[image[anchor]].clone(),
            None => (0..n).collect(),
        };
        cursor[depth] = 0;
    }

    // Parallel classes keyed by endpoint index pair.
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in 0..g.edge_count() {
        classes.entry(g.ends(e)).or_default().push(e);
    }
    let mut elements = Vec::new();
    for vertex_map in perms {
        let mut choices: Vec<(Vec<usize>, Vec<Vec<usize>>)> = Vec::new();
        for (&(a, b), src) in &classes {
            let (x, y) = (vertex_map[a], vertex_map[b]);
            let key = (x.min(y), x.max(y));
            let dst = &classes[&key];
            choices.push((src.clone(), permutations(dst)));
        }
        let mut idx = vec![0usize; choices.len()];
        loop {
            spent += 1;
            if spent > budget {
                return Err(Error::BudgetExceeded {
                    what: "automorphism search",
                    limit: budget,
                });
            }
            let mut edge_map = vec![0; g.edge_count()];
            for (k, (src, perms)) in choices.iter().enumerate() {
                for (s, d) in src.iter().zip(&perms[idx[k]]) {
                    edge_map[*s] = *d;
                }
            }
            elements.push(Automorphism {
                vertex_map: vertex_map.clone(),
                edge_map,
            });
            // mixed-radix increment
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].1.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    elements.sort();
    Ok(AutomorphismGroup { elements })
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
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

/// Whether `family`, as a set of edge sets, is mapped onto itself by every
/// group element.
pub fn orbit_closed(g: &Multigraph, family: &[EdgeSet], group: &AutomorphismGroup) -> bool {
    let set: std::collections::BTreeSet<&EdgeSet> = family.iter().collect();
    group
        .elements()
        .iter()
        .all(|a| family.iter().all(|f| set.contains(&a.apply_edge_set(g, f))))
}

/// Partition of an automorphism-closed family into orbits (lists of
/// indices, each sorted; orbits ordered by smallest index).
pub fn orbits(g: &Multigraph, family: &[EdgeSet], group: &AutomorphismGroup) -> Vec<Vec<usize>> {
    let pos: BTreeMap<&EdgeSet, usize> = family.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut assigned = vec![false; family.len()];
    let mut out = Vec::new();
    for i in 0..family.len() {
        if assigned[i] {
            continue;
        }
        let mut orbit: Vec<usize> = group
            .elements()
            .iter()
            .filter_map(|a| pos.get(&a.apply_edge_set(g, &family[i])).copied())
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &j in &orbit {
            assigned[j] = true;
        }
        out.push(orbit);
    }
    out
}
