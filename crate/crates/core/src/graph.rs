//! Simple undirected graphs over sparse integer vertex ids, plus the
//! separation primitives (components, vertex deletion, avoiding paths)
//! that the clique machinery is built on.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex identifier. Ids are arbitrary non-negative integers and need not
/// be contiguous, so paper-style 1-based figures keep their labels.
pub type VertexId = u32;

/// Sorted, duplicate-free set of vertex ids with exact set semantics.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<VertexId>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { members: Vec::new() }
    }

    pub fn from_sorted(members: Vec<VertexId>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.members
    }

    pub fn min(&self) -> Option<VertexId> {
        self.members.first().copied()
    }

    pub fn insert(&mut self, v: VertexId) {
        if let Err(pos) = self.members.binary_search(&v) {
            self.members.insert(pos, v);
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.members.clone();
        out.extend(other.iter());
        out.sort_unstable();
        out.dedup();
        VertexSet { members: out }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_superset(&self, other: &VertexSet) -> bool {
        other.is_subset(self)
    }

    pub fn is_proper_subset(&self, other: &VertexSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut members: Vec<VertexId> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }
}

impl<const N: usize> From<[VertexId; N]> for VertexSet {
    fn from(ids: [VertexId; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Immutable simple undirected graph. No self-loops; adjacency is kept
/// symmetric by construction. Safe to share across threads for queries.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from explicit vertices and edges. Edge endpoints are
    /// registered as vertices automatically; self-loops are rejected.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
        for v in vertices {
            adj.entry(v).or_default();
        }
        let mut edge_count = 0;
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            adj.entry(u).or_default();
            adj.entry(v).or_default();
            if adj.get_mut(&u).unwrap().insert(v) {
                edge_count += 1;
            }
            adj.get_mut(&v).unwrap().insert(u);
        }
        Ok(Graph { adj, edge_count })
    }

    pub fn from_edges<E>(edges: E) -> Result<Graph>
    where
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Graph::new(std::iter::empty(), edges)
    }

    /// Union of the pairwise edges inside each given clique.
    pub fn from_cliques(cliques: &[VertexSet]) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut vertices = Vec::new();
        for c in cliques {
            let m = c.as_slice();
            vertices.extend_from_slice(m);
            for i in 0..m.len() {
                for j in i + 1..m.len() {
                    edges.push((m[i], m[j]));
                }
            }
        }
        Graph::new(vertices, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|ns| ns.contains(&v))
    }

    /// Neighbors of `v` in ascending id order. Empty for unknown vertices.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, |ns| ns.len())
    }

    /// All edges as (u, v) with u < v, in ascending order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (&u, ns) in &self.adj {
            for &v in ns.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    /// True when every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let m = set.as_slice();
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if !self.has_edge(m[i], m[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// A clique is maximal when no outside vertex is adjacent to all members.
    pub fn is_maximal_clique(&self, set: &VertexSet) -> bool {
        if set.is_empty() || !self.is_clique(set) {
            return false;
        }
        !self
            .vertices()
            .filter(|&v| !set.contains(v))
            .any(|v| set.iter().all(|u| self.has_edge(u, v)))
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() <= 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges()
        )
    }
}

/// Components of a graph after deleting a separator, with membership lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorReport {
    pub separator: VertexSet,
    /// Connected components of G − separator, ordered by smallest member.
    pub components: Vec<VertexSet>,
    pub component_of: BTreeMap<VertexId, usize>,
}

impl SeparatorReport {
    pub fn component_index(&self, v: VertexId) -> Option<usize> {
        self.component_of.get(&v).copied()
    }

    /// Indices of the components met by `set − separator`.
    pub fn components_of_set(&self, set: &VertexSet) -> BTreeSet<usize> {
        set.iter().filter_map(|v| self.component_index(v)).collect()
    }
}

/// Maximal connected vertex sets, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    delete_vertices(g, &VertexSet::new())
        .expect("empty separator is always valid")
        .components
}

/// Components of G − s. An s-avoiding path between u, v ∉ s exists exactly
/// when the two vertices land in the same component.
pub fn delete_vertices(g: &Graph, s: &VertexSet) -> Result<SeparatorReport> {
    if let Some(v) = s.iter().find(|&v| !g.contains_vertex(v)) {
        return Err(Error::InvalidArgument(format!(
            "separator vertex {v} is not in the graph"
        )));
    }
    let mut component_of: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut components: Vec<VertexSet> = Vec::new();
    for start in g.vertices() {
        if s.contains(start) || component_of.contains_key(&start) {
            continue;
        }
        let idx = components.len();
        let mut seen = VertexSet::new();
        let mut queue = VecDeque::from([start]);
        component_of.insert(start, idx);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if !s.contains(w) && !component_of.contains_key(&w) {
                    component_of.insert(w, idx);
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        components.push(seen);
    }
    Ok(SeparatorReport {
        separator: s.clone(),
        components,
        component_of,
    })
}

/// Minimum-edge-count path from a vertex of `from` to a vertex of `to`
/// whose internal vertices avoid `s`. Members of `from`/`to` that lie in
/// `s` are ignored. Ties are broken by the lexicographically smallest
/// vertex sequence, so identical inputs always give identical output.
pub fn shortest_avoiding_path(
    g: &Graph,
    s: &VertexSet,
    from: &VertexSet,
    to: &VertexSet,
) -> Result<Option<Vec<VertexId>>> {
    if from.is_empty() || to.is_empty() {
        return Err(Error::InvalidArgument(
            "path endpoints must be non-empty sets".into(),
        ));
    }
    for v in s.iter().chain(from.iter()).chain(to.iter()) {
        if !g.contains_vertex(v) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is not in the graph"
            )));
        }
    }
    let from: VertexSet = from.iter().filter(|&v| !s.contains(v)).collect();
    let to: VertexSet = to.iter().filter(|&v| !s.contains(v)).collect();
    if from.is_empty() || to.is_empty() {
        return Ok(None);
    }

    // Multi-source BFS from the target set through vertices outside s.
    let mut dist: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for v in to.iter() {
        dist.insert(v, 0);
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[&u];
        for w in g.neighbors(u) {
            if !s.contains(w) && !dist.contains_key(&w) {
                dist.insert(w, du + 1);
                queue.push_back(w);
            }
        }
    }

    let best = from.iter().filter_map(|v| dist.get(&v).copied()).min();
    let Some(len) = best else {
        return Ok(None);
    };
    // Smallest feasible start, then greedy smallest descent toward `to`.
    let start = from
        .iter()
        .find(|v| dist.get(v) == Some(&len))
        .expect("some start vertex attains the minimum");
    let mut path = vec![start];
    let mut cur = start;
    let mut remaining = len;
    while remaining > 0 {
        let next = g
            .neighbors(cur)
            .find(|w| !s.contains(*w) && dist.get(w) == Some(&(remaining - 1)))
            .expect("BFS distance admits a descent step");
        path.push(next);
        cur = next;
        remaining -= 1;
    }
    Ok(Some(path))
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

impl Graph {
    /// Parses the `u v` edge-list text format: one edge per line, `#`
    /// starts a comment, `node u` declares an isolated vertex.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |tok: &str| -> Result<VertexId> {
                tok.parse()
                    .map_err(|_| Error::Parse(format!("line {}: bad vertex id {tok:?}", lineno + 1)))
            };
            match fields.as_slice() {
                ["node", v] => vertices.push(parse(v)?),
                [u, v] => edges.push((parse(u)?, parse(v)?)),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected `u v` or `node u`",
                        lineno + 1
                    )))
                }
            }
        }
        Graph::new(vertices, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            if self.degree(v) == 0 {
                out.push_str(&format!("node {v}\n"));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_json(text: &str) -> Result<Graph> {
        let parsed: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Graph::new(parsed.vertices, parsed.edges)
    }

    pub fn to_json(&self) -> String {
        let repr = GraphJson {
            vertices: self.vertices().collect(),
            edges: self.edges(),
        };
        serde_json::to_string(&repr).expect("graph serialization cannot fail")
    }

    /// Accepts either format: JSON when the text starts with `{`.
    pub fn parse_auto(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            Graph::parse_json(text)
        } else {
            Graph::parse_edge_list(text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_123() -> Graph {
        Graph::from_edges([(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_self_loops() {
        assert!(matches!(
            Graph::from_edges([(1, 1)]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn components_empty_graph() {
        let g = Graph::new([], []).unwrap();
        assert!(connected_components(&g).is_empty());
    }

    #[test]
    fn components_two_pairs() {
        let g = Graph::from_edges([(1, 2), (3, 4)]).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps, vec![VertexSet::from([1, 2]), VertexSet::from([3, 4])]);
    }

    #[test]
    fn delete_cut_vertex_of_path() {
        let rep = delete_vertices(&path_123(), &VertexSet::from([2])).unwrap();
        assert_eq!(rep.components, vec![VertexSet::from([1]), VertexSet::from([3])]);
        assert_eq!(rep.component_index(1), Some(0));
        assert_eq!(rep.component_index(2), None);
    }

    #[test]
    fn delete_empty_set_is_components() {
        let g = Graph::from_edges([(1, 2), (3, 4), (4, 5)]).unwrap();
        let rep = delete_vertices(&g, &VertexSet::new()).unwrap();
        assert_eq!(rep.components, connected_components(&g));
    }

    #[test]
    fn delete_rejects_foreign_vertex() {
        assert!(matches!(
            delete_vertices(&path_123(), &VertexSet::from([9])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn shortest_path_unique() {
        let p = shortest_avoiding_path(
            &path_123(),
            &VertexSet::new(),
            &VertexSet::from([1]),
            &VertexSet::from([3]),
        )
        .unwrap();
        assert_eq!(p, Some(vec![1, 2, 3]));
    }

    #[test]
    fn shortest_path_blocked_by_separator() {
        let p = shortest_avoiding_path(
            &path_123(),
            &VertexSet::from([2]),
            &VertexSet::from([1]),
            &VertexSet::from([3]),
        )
        .unwrap();
        assert_eq!(p, None);
    }

    #[test]
    fn shortest_path_rejects_empty_endpoint() {
        assert!(matches!(
            shortest_avoiding_path(
                &path_123(),
                &VertexSet::new(),
                &VertexSet::new(),
                &VertexSet::from([3])
            ),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn shortest_path_prefers_lexicographic() {
        // 1-2-4 and 1-3-4 are both shortest; 1,2,4 is the smaller sequence.
        let g = Graph::from_edges([(1, 2), (2, 4), (1, 3), (3, 4)]).unwrap();
        let p = shortest_avoiding_path(
            &g,
            &VertexSet::new(),
            &VertexSet::from([1]),
            &VertexSet::from([4]),
        )
        .unwrap();
        assert_eq!(p, Some(vec![1, 2, 4]));
    }

    #[test]
    fn shortest_path_coinciding_endpoints() {
        let g = Graph::from_edges([(1, 2)]).unwrap();
        let p = shortest_avoiding_path(
            &g,
            &VertexSet::new(),
            &VertexSet::from([1, 2]),
            &VertexSet::from([2]),
        )
        .unwrap();
        assert_eq!(p, Some(vec![2]));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new([7], [(1, 2), (2, 3)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        let with_comment = format!("# a comment\n{text}");
        assert_eq!(Graph::parse_edge_list(&with_comment).unwrap(), g);
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::new([7], [(1, 2), (2, 3)]).unwrap();
        assert_eq!(Graph::parse_json(&g.to_json()).unwrap(), g);
        assert_eq!(Graph::parse_auto(&g.to_json()).unwrap(), g);
    }
}
