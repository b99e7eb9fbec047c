//! Chordality recognition and maximal-clique enumeration via perfect
//! elimination orderings.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// A permutation of the vertices produced by maximum cardinality search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    order: Vec<VertexId>,
}

impl EliminationOrder {
    pub fn as_slice(&self) -> &[VertexId] {
        &self.order
    }

    /// The reversed order, which for chordal graphs is a perfect
    /// elimination order.
    pub fn reversed(&self) -> Vec<VertexId> {
        let mut rev = self.order.clone();
        rev.reverse();
        rev
    }
}

/// The maximal cliques of a chordal graph, with per-vertex membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCatalog {
    cliques: Vec<VertexSet>,
    membership: BTreeMap<VertexId, Vec<usize>>,
}

impl CliqueCatalog {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn clique(&self, idx: usize) -> &VertexSet {
        &self.cliques[idx]
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    /// Indices of the cliques containing `v`, ascending.
    pub fn containing(&self, v: VertexId) -> &[usize] {
        self.membership.get(&v).map_or(&[], Vec::as_slice)
    }

    /// Index of a clique equal to `set`, when present.
    pub fn index_of(&self, set: &VertexSet) -> Option<usize> {
        self.cliques.binary_search(set).ok()
    }

    /// Index of the lexicographically first clique containing `set`.
    pub fn first_containing_set(&self, set: &VertexSet) -> Option<usize> {
        self.cliques.iter().position(|c| set.is_subset(c))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.membership.keys().copied()
    }
}

/// Maximum cardinality search order; ties go to the smallest vertex id.
/// For a chordal graph the reverse of this order is a perfect elimination
/// order, which is what `is_chordal` tests.
pub fn mcs_order(g: &Graph) -> EliminationOrder {
    let mut weight: BTreeMap<VertexId, usize> = g.vertices().map(|v| (v, 0)).collect();
    let mut order = Vec::with_capacity(g.vertex_count());
    while !weight.is_empty() {
        // BTreeMap iteration is ascending, so max_by_key on (weight) with
        // a strict comparison keeps the smallest id among ties.
        let (&v, _) = weight
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
            .expect("non-empty");
        weight.remove(&v);
        for w in g.neighbors(v) {
            if let Some(c) = weight.get_mut(&w) {
                *c += 1;
            }
        }
        order.push(v);
    }
    EliminationOrder { order }
}

/// True when eliminating vertices in `order` always leaves the later
/// neighbors of the eliminated vertex forming a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[VertexId]) -> bool {
    let position: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if position.len() != g.vertex_count() || !order.iter().all(|&v| g.contains_vertex(v)) {
        return false;
    }
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<VertexId> = g.neighbors(v).filter(|w| position[w] > i).collect();
        for (a, &x) in later.iter().enumerate() {
            for &y in &later[a + 1..] {
                if !g.has_edge(x, y) {
                    return false;
                }
            }
        }
    }
    true
}

/// Chordality test: a graph is chordal exactly when the reverse of a
/// maximum cardinality search order is a perfect elimination order.
pub fn is_chordal(g: &Graph) -> bool {
    is_perfect_elimination_order(g, &mcs_order(g).reversed())
}

/// Enumerates the maximal cliques of a chordal graph by sweeping a
/// perfect elimination order and keeping the set-maximal candidates.
/// The catalog is sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Result<CliqueCatalog> {
    let order = mcs_order(g).reversed();
    if !is_perfect_elimination_order(g, &order) {
        return Err(Error::NotChordal);
    }
    let position: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut candidates: Vec<VertexSet> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut c: VertexSet = g.neighbors(v).filter(|w| position[w] > i).collect();
            c.insert(v);
            c
        })
        .collect();
    candidates.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut cliques: Vec<VertexSet> = Vec::new();
    for cand in candidates {
        if !cliques.iter().any(|kept| cand.is_subset(kept)) {
            cliques.push(cand);
        }
    }
    cliques.sort();
    let mut membership: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (idx, c) in cliques.iter().enumerate() {
        for v in c.iter() {
            membership.entry(v).or_default().push(idx);
        }
    }
    Ok(CliqueCatalog { cliques, membership })
}
