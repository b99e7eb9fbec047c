//! Structural analyzers for reduced clique graphs: induced-cycle
//! enumeration, minimal cycle edges, the separator trichotomy on induced
//! cycles, the spanning-tree characterization check for clique graphs,
//! and cycle-graph recognition.

use std::collections::{BTreeMap, VecDeque};

use crate::cliquegraph::CliqueGraph;
use crate::error::{Error, Result};
use crate::graph::{delete_vertices, Graph, VertexId, VertexSet};
use crate::oracles::{all_spanning_trees, EnumerationBudget};

/// An induced cycle stored in canonical rotation: smallest node first,
/// then the lexicographically smaller direction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct InducedCycle {
    nodes: Vec<VertexId>,
}

impl InducedCycle {
    pub fn new(nodes: Vec<VertexId>) -> Result<InducedCycle> {
        if nodes.len() < 3 {
            return Err(Error::InvalidArgument("cycles have at least 3 nodes".into()));
        }
        let mut distinct = nodes.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != nodes.len() {
            return Err(Error::InvalidArgument("cycle nodes must be distinct".into()));
        }
        Ok(InducedCycle {
            nodes: canonical_rotation(&nodes),
        })
    }

    pub fn nodes(&self) -> &[VertexId] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Consecutive node pairs, including the wrap-around edge.
    pub fn edge_pairs(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.nodes.len())
            .map(|i| (self.nodes[i], self.nodes[(i + 1) % self.nodes.len()]))
            .collect()
    }

    /// True when the cycle is an induced cycle of `h`.
    pub fn is_induced_in(&self, h: &Graph) -> bool {
        let n = self.nodes.len();
        for i in 0..n {
            for j in i + 1..n {
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                if h.has_edge(self.nodes[i], self.nodes[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

fn canonical_rotation(nodes: &[VertexId]) -> Vec<VertexId> {
    let n = nodes.len();
    let start = (0..n).min_by_key(|&i| nodes[i]).unwrap();
    let forward: Vec<VertexId> = (0..n).map(|i| nodes[(start + i) % n]).collect();
    let backward: Vec<VertexId> = (0..n).map(|i| nodes[(start + n - i) % n]).collect();
    if forward <= backward {
        forward
    } else {
        backward
    }
}

/// All induced cycles of `h` with exactly `k` nodes, each reported once
/// in canonical rotation. DFS over paths anchored at their smallest node,
/// pruning on chords as soon as they appear.
pub fn induced_cycles(h: &Graph, k: usize) -> Result<Vec<InducedCycle>> {
    if k < 3 {
        return Err(Error::InvalidArgument(
            "induced cycles need at least 3 nodes".into(),
        ));
    }
    let verts: Vec<VertexId> = h.vertices().collect();
    let mut out = Vec::new();
    let mut path: Vec<VertexId> = Vec::with_capacity(k);
    for &s in &verts {
        path.push(s);
        extend_cycle(h, &verts, s, &mut path, k, &mut out);
        path.pop();
    }
    out.sort();
    Ok(out)
}

fn extend_cycle(
    h: &Graph,
    verts: &[VertexId],
    anchor: VertexId,
    path: &mut Vec<VertexId>,
    k: usize,
    out: &mut Vec<InducedCycle>,
) {
    if path.len() == k {
        if path[1] < path[k - 1] {
            out.push(InducedCycle::new(path.clone()).expect("path nodes are distinct"));
        }
        return;
    }
    let last = *path.last().unwrap();
    for &v in verts {
        if v <= anchor || path.contains(&v) || !h.has_edge(last, v) {
            continue;
        }
        if path.len() >= 2 {
            // Only the closing node may touch the anchor again.
            let closing = path.len() == k - 1;
            if h.has_edge(anchor, v) != closing {
                continue;
            }
            // No chord back to earlier interior nodes.
            if path[1..path.len() - 1].iter().any(|&p| h.has_edge(p, v)) {
                continue;
            }
        }
        path.push(v);
        extend_cycle(h, verts, anchor, path, k, out);
        path.pop();
    }
}

/// Validates that `cycle` is an induced cycle of the reduced subgraph of
/// `cg`: consecutive cliques are C_R-adjacent and nothing else is.
fn check_cycle_in_reduced(cg: &CliqueGraph, cycle: &InducedCycle) -> Result<()> {
    let k = cg.node_count();
    if cycle.nodes().iter().any(|&v| v as usize >= k) {
        return Err(Error::InvalidArgument("cycle node out of range".into()));
    }
    let n = cycle.len();
    let nodes = cycle.nodes();
    for i in 0..n {
        for j in i + 1..n {
            let consecutive = j == i + 1 || (i == 0 && j == n - 1);
            let adjacent = cg.reduced_adjacent(nodes[i] as usize, nodes[j] as usize);
            if adjacent != consecutive {
                return Err(Error::InvalidArgument(
                    "cycle is not an induced cycle of the reduced clique graph".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Indices of the cycle edges whose intersection cardinality is minimum
/// over the cycle, ascending.
pub fn minimal_edges(cg: &CliqueGraph, cycle: &InducedCycle) -> Result<Vec<usize>> {
    check_cycle_in_reduced(cg, cycle)?;
    let edge_ids: Vec<usize> = cycle
        .edge_pairs()
        .into_iter()
        .map(|(a, b)| {
            cg.edge_index_between(a as usize, b as usize)
                .expect("consecutive cycle cliques intersect")
        })
        .collect();
    let min = edge_ids
        .iter()
        .map(|&i| cg.edge(i).intersection.len())
        .min()
        .expect("cycles have edges");
    let mut out: Vec<usize> = edge_ids
        .into_iter()
        .filter(|&i| cg.edge(i).intersection.len() == min)
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Which of the three separator cases an induced cycle falls into, after
/// deleting the intersection of its minimal edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrichotomyCase {
    /// Every clique residue except the second lies in the component of
    /// the first.
    CaseI,
    /// Every clique residue except the first lies in the component of
    /// the second.
    CaseII,
    /// Length four, residues alternating between the two components.
    CaseIII,
}

#[derive(Clone, Debug)]
pub struct TrichotomyVerdict {
    pub case: TrichotomyCase,
    /// The lexicographically first minimal edge, as a clique-index pair.
    pub minimal_edge: (usize, usize),
    pub s: VertexSet,
    pub h0: VertexSet,
    pub h1: VertexSet,
}

/// Verifies the separator trichotomy on an induced cycle of C_R(G) with
/// at least four nodes: deleting S, the intersection of a minimal edge,
/// leaves every cycle residue inside one of the two components flanking
/// that edge, in one of three patterns. A `LemmaViolation` can only be
/// produced by an input violating the law, which no chordal graph does.
pub fn verify_trichotomy(cg: &CliqueGraph, cycle: &InducedCycle) -> Result<TrichotomyVerdict> {
    if cycle.len() < 4 {
        return Err(Error::InvalidArgument(
            "the trichotomy applies to cycles with at least 4 nodes".into(),
        ));
    }
    let minimal = minimal_edges(cg, cycle)?;
    let edge = cg.edge(minimal[0]);
    let n = cycle.len();
    let nodes = cycle.nodes();

    // Rebase the cycle so it starts with the minimal edge, oriented from
    // the edge's lower clique index to its higher one.
    let pa = nodes
        .iter()
        .position(|&v| v as usize == edge.a)
        .expect("edge endpoint lies on the cycle");
    let seq: Vec<usize> = if nodes[(pa + 1) % n] as usize == edge.b {
        (0..n).map(|i| nodes[(pa + i) % n] as usize).collect()
    } else {
        (0..n).map(|i| nodes[(pa + n - i) % n] as usize).collect()
    };

    let s = edge.intersection.clone();
    let report = delete_vertices(cg.host(), &s)?;
    let mut residue_component = Vec::with_capacity(n);
    for &c in &seq {
        let residue = cg.catalog().clique(c).difference(&s);
        let comps = report.components_of_set(&residue);
        if comps.len() != 1 {
            return Err(Error::LemmaViolation(format!(
                "residue {residue} of clique {c} does not sit in a single component"
            )));
        }
        residue_component.push(*comps.iter().next().unwrap());
    }
    let h0 = residue_component[0];
    let h1 = residue_component[1];
    if h0 == h1 {
        return Err(Error::LemmaViolation(
            "minimal edge endpoints share a component despite being a separating pair".into(),
        ));
    }
    if let Some(i) = residue_component.iter().position(|&c| c != h0 && c != h1) {
        return Err(Error::LemmaViolation(format!(
            "residue of cycle position {i} avoids both flanking components"
        )));
    }
    let tail_all = |target: usize| residue_component[2..].iter().all(|&c| c == target);
    let case = if tail_all(h0) {
        TrichotomyCase::CaseI
    } else if tail_all(h1) {
        TrichotomyCase::CaseII
    } else if n == 4 && residue_component[2] == h0 && residue_component[3] == h1 {
        TrichotomyCase::CaseIII
    } else {
        return Err(Error::LemmaViolation(
            "residue pattern matches none of the three cases".into(),
        ));
    };
    Ok(TrichotomyVerdict {
        case,
        minimal_edge: (edge.a, edge.b),
        s,
        h0: report.components[h0].clone(),
        h1: report.components[h1].clone(),
    })
}

/// Spanning-tree characterization check: true exactly when some spanning
/// tree T of `h` has, for every edge uv of `h`, the T-path from u to v
/// inducing a clique. Graphs passing it are the clique graphs of chordal
/// graphs. Deliberately exhaustive, guarded by the enumeration budget.
pub fn sb_check(h: &Graph, budget: &EnumerationBudget) -> Result<bool> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = h.edges();
    let trees = all_spanning_trees(h, budget)?;
    'tree: for tree in &trees {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &(u, v) in tree {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        for &(u, v) in &edges {
            let path = tree_path(&adj, u, v);
            for i in 0..path.len() {
                for j in i + 1..path.len() {
                    if !h.has_edge(path[i], path[j]) {
                        continue 'tree;
                    }
                }
            }
        }
        return Ok(true);
    }
    Ok(false)
}

fn tree_path(adj: &BTreeMap<VertexId, Vec<VertexId>>, from: VertexId, to: VertexId) -> Vec<VertexId> {
    let mut prev: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &w in adj.get(&u).into_iter().flatten() {
            if w != from && !prev.contains_key(&w) {
                prev.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[&cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// `Some(n)` when `h` is exactly an n-cycle: connected and 2-regular.
pub fn is_cycle_graph(h: &Graph) -> Option<usize> {
    let n = h.vertex_count();
    if n < 3 || !h.is_connected() || h.vertices().any(|v| h.degree(v) != 2) {
        return None;
    }
    Some(n)
}
