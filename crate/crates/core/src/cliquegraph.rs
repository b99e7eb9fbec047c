//! The clique graph C(G) and reduced clique graph C_R(G) of a chordal
//! graph, with separating-pair flags and legitimate edge weightings.
//!
//! Nodes are the maximal cliques. Two cliques are adjacent in C(G) when
//! they intersect; the edge additionally belongs to C_R(G) when the pair
//! is separating, i.e. removing the intersection disconnects the two
//! clique residues.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chordal::{maximal_cliques, CliqueCatalog};
use crate::error::{Error, Result};
use crate::graph::{delete_vertices, Graph, VertexId, VertexSet};

/// Weight function on realized clique intersections. A weighting is
/// legitimate when the empty set maps to zero and proper inclusion of
/// realized intersections forces a strict weight increase; cardinality is
/// the canonical instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightingPolicy {
    /// σ(X) = |X|.
    Cardinality,
    /// σ(X) = Σ_{v∈X} w(v). Legitimate whenever all weights are positive;
    /// vertices missing from the map count as zero.
    VertexWeights(BTreeMap<VertexId, u64>),
}

impl WeightingPolicy {
    pub fn evaluate(&self, set: &VertexSet) -> u64 {
        match self {
            WeightingPolicy::Cardinality => set.len() as u64,
            WeightingPolicy::VertexWeights(w) => {
                set.iter().map(|v| w.get(&v).copied().unwrap_or(0)).sum()
            }
        }
    }
}

/// True when the policy is a legitimate weighting over the realized
/// domain of `catalog`: every pairwise clique intersection plus ∅.
pub fn validate_weighting(catalog: &CliqueCatalog, policy: &WeightingPolicy) -> bool {
    if policy.evaluate(&VertexSet::new()) != 0 {
        return false;
    }
    let mut domain: Vec<VertexSet> = vec![VertexSet::new()];
    for a in 0..catalog.len() {
        for b in a + 1..catalog.len() {
            domain.push(catalog.clique(a).intersection(catalog.clique(b)));
        }
    }
    domain.sort();
    domain.dedup();
    for x in &domain {
        for y in &domain {
            if x.is_proper_subset(y) && policy.evaluate(x) >= policy.evaluate(y) {
                return false;
            }
        }
    }
    true
}

/// Edge of C(G): a non-disjoint clique pair with its cached intersection,
/// separating-pair flag and policy weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueGraphEdge {
    pub a: usize,
    pub b: usize,
    pub intersection: VertexSet,
    pub separating: bool,
    pub weight: u64,
}

/// C(G) with C_R(G) as the separating-flagged edge subset. Immutable
/// after build; queries are safe to share across threads.
#[derive(Clone, Debug)]
pub struct CliqueGraph {
    catalog: CliqueCatalog,
    edges: Vec<CliqueGraphEdge>,
    host: Graph,
    policy: WeightingPolicy,
}

/// True when the two cliques form a separating pair of `g`: no path from
/// c − c2 to c2 − c avoids the intersection. Exposed for diagnostics even
/// for disjoint pairs, though C_R adjacency additionally requires a
/// non-empty intersection.
pub fn is_separating_pair(g: &Graph, c: &VertexSet, c2: &VertexSet) -> Result<bool> {
    if c == c2 || !g.is_maximal_clique(c) || !g.is_maximal_clique(c2) {
        return Err(Error::InvalidArgument(
            "arguments must be distinct maximal cliques".into(),
        ));
    }
    separating_by_components(g, c, c2)
}

fn separating_by_components(g: &Graph, c: &VertexSet, c2: &VertexSet) -> Result<bool> {
    let s = c.intersection(c2);
    let report = delete_vertices(g, &s)?;
    let left = report.components_of_set(&c.difference(c2));
    let right = report.components_of_set(&c2.difference(c));
    Ok(left.is_disjoint(&right))
}

/// Builds C(G) under `policy`. Disconnected chordal hosts are accepted;
/// connectivity only matters to the spanning-tree operations downstream.
pub fn build_clique_graph(g: &Graph, policy: WeightingPolicy) -> Result<CliqueGraph> {
    let catalog = maximal_cliques(g)?;
    if !validate_weighting(&catalog, &policy) {
        return Err(Error::IllegitimateWeighting(
            "policy is not strictly monotone on realized intersections".into(),
        ));
    }
    let mut edges = Vec::new();
    for a in 0..catalog.len() {
        for b in a + 1..catalog.len() {
            let intersection = catalog.clique(a).intersection(catalog.clique(b));
            if intersection.is_empty() {
                continue;
            }
            let separating = separating_by_components(g, catalog.clique(a), catalog.clique(b))?;
            let weight = policy.evaluate(&intersection);
            edges.push(CliqueGraphEdge {
                a,
                b,
                intersection,
                separating,
                weight,
            });
        }
    }
    Ok(CliqueGraph {
        catalog,
        edges,
        host: g.clone(),
        policy,
    })
}

impl CliqueGraph {
    pub fn catalog(&self) -> &CliqueCatalog {
        &self.catalog
    }

    pub fn node_count(&self) -> usize {
        self.catalog.len()
    }

    pub fn edges(&self) -> &[CliqueGraphEdge] {
        &self.edges
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn policy(&self) -> &WeightingPolicy {
        &self.policy
    }

    /// The C(G) edge joining cliques `a` and `b`, if they intersect.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<&CliqueGraphEdge> {
        self.edge_index_between(a, b).map(|i| &self.edges[i])
    }

    /// Index into `edges()` of the edge joining cliques `a` and `b`.
    pub fn edge_index_between(&self, a: usize, b: usize) -> Option<usize> {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .binary_search_by_key(&(lo, hi), |e| (e.a, e.b))
            .ok()
    }

    pub fn edge(&self, idx: usize) -> &CliqueGraphEdge {
        &self.edges[idx]
    }

    /// True when cliques `a` and `b` are adjacent in C_R(G).
    pub fn reduced_adjacent(&self, a: usize, b: usize) -> bool {
        self.edge_between(a, b).is_some_and(|e| e.separating)
    }

    /// View keeping every edge of C(G).
    pub fn full_view(&self) -> CliqueGraphView<'_> {
        CliqueGraphView {
            cg: self,
            edge_indices: (0..self.edges.len()).collect(),
        }
    }

    /// C(G) as a plain graph whose vertices are clique indices.
    pub fn as_graph(&self) -> Graph {
        self.full_view().as_graph()
    }
}

/// Edge-filtered view of a clique graph; the node set is unchanged.
#[derive(Clone, Debug)]
pub struct CliqueGraphView<'a> {
    cg: &'a CliqueGraph,
    edge_indices: Vec<usize>,
}

/// The subgraph of C(G) keeping exactly the separating-flagged edges,
/// which is C_R(G).
pub fn reduced_subgraph(cg: &CliqueGraph) -> CliqueGraphView<'_> {
    CliqueGraphView {
        cg,
        edge_indices: (0..cg.edges.len())
            .filter(|&i| cg.edges[i].separating)
            .collect(),
    }
}

impl<'a> CliqueGraphView<'a> {
    pub fn clique_graph(&self) -> &'a CliqueGraph {
        self.cg
    }

    pub fn node_count(&self) -> usize {
        self.cg.catalog.len()
    }

    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn edges(&self) -> impl Iterator<Item = &'a CliqueGraphEdge> + '_ {
        self.edge_indices.iter().map(|&i| &self.cg.edges[i])
    }

    pub fn edge_count(&self) -> usize {
        self.edge_indices.len()
    }

    /// The view as a plain graph whose vertices are clique indices
    /// (isolated clique nodes included).
    pub fn as_graph(&self) -> Graph {
        Graph::new(
            (0..self.node_count()).map(|i| i as VertexId),
            self.edges().map(|e| (e.a as VertexId, e.b as VertexId)),
        )
        .expect("clique indices are distinct")
    }

    pub fn is_connected(&self) -> bool {
        self.as_graph().is_connected()
    }
}

#[derive(Serialize, Deserialize)]
struct CliqueGraphJson {
    cliques: Vec<VertexSet>,
    edges: Vec<CliqueGraphEdge>,
}

impl CliqueGraph {
    /// JSON export mirroring the edge records; `reduced_only` keeps just
    /// the separating edges.
    pub fn to_json(&self, reduced_only: bool) -> String {
        let edges = self
            .edges
            .iter()
            .filter(|e| !reduced_only || e.separating)
            .cloned()
            .collect();
        let repr = CliqueGraphJson {
            cliques: self.catalog.cliques().to_vec(),
            edges,
        };
        serde_json::to_string_pretty(&repr).expect("clique graph serialization cannot fail")
    }

    /// DOT export: separating edges are solid, the rest dashed, all
    /// labeled with their weight.
    pub fn to_dot(&self, reduced_only: bool) -> String {
        let mut out = String::from("graph cliques {\n");
        for (i, c) in self.catalog.cliques().iter().enumerate() {
            out.push_str(&format!("  k{i} [label=\"{c}\"];\n"));
        }
        for e in &self.edges {
            if reduced_only && !e.separating {
                continue;
            }
            let style = if e.separating { "solid" } else { "dashed" };
            out.push_str(&format!(
                "  k{} -- k{} [label=\"{}\", style={}];\n",
                e.a, e.b, e.weight, style
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges([(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    fn path3() -> Graph {
        Graph::from_edges([(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn path_cliques_form_separating_pair() {
        let g = path3();
        assert!(is_separating_pair(&g, &VertexSet::from([1, 2]), &VertexSet::from([2, 3])).unwrap());
    }

    #[test]
    fn separating_pair_rejects_non_maximal() {
        let g = triangle();
        assert!(matches!(
            is_separating_pair(&g, &VertexSet::from([1, 2]), &VertexSet::from([1, 2, 3])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn separating_pair_is_symmetric() {
        let g = path3();
        let a = VertexSet::from([1, 2]);
        let b = VertexSet::from([2, 3]);
        assert_eq!(
            is_separating_pair(&g, &a, &b).unwrap(),
            is_separating_pair(&g, &b, &a).unwrap()
        );
    }

    #[test]
    fn triangle_clique_graph_has_no_edges() {
        let cg = build_clique_graph(&triangle(), WeightingPolicy::Cardinality).unwrap();
        assert_eq!(cg.node_count(), 1);
        assert!(cg.edges().is_empty());
        assert_eq!(reduced_subgraph(&cg).edge_count(), 0);
    }

    #[test]
    fn path_clique_graph_single_separating_edge() {
        let cg = build_clique_graph(&path3(), WeightingPolicy::Cardinality).unwrap();
        assert_eq!(cg.node_count(), 2);
        assert_eq!(cg.edges().len(), 1);
        let e = &cg.edges()[0];
        assert_eq!(e.intersection, VertexSet::from([2]));
        assert_eq!(e.weight, 1);
        assert!(e.separating);
    }

    #[test]
    fn build_rejects_non_chordal() {
        let c4 = Graph::from_edges([(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(matches!(
            build_clique_graph(&c4, WeightingPolicy::Cardinality),
            Err(Error::NotChordal)
        ));
    }

    #[test]
    fn build_rejects_illegitimate_policy() {
        // All-zero vertex weights collapse σ to zero, violating strictness.
        let zero = WeightingPolicy::VertexWeights(BTreeMap::new());
        assert!(matches!(
            build_clique_graph(&path3(), zero),
            Err(Error::IllegitimateWeighting(_))
        ));
    }

    #[test]
    fn cardinality_policy_is_legitimate() {
        let cat = maximal_cliques(&path3()).unwrap();
        assert!(validate_weighting(&cat, &WeightingPolicy::Cardinality));
    }

    #[test]
    fn uniform_positive_vertex_weights_are_legitimate() {
        let g = path3();
        let cat = maximal_cliques(&g).unwrap();
        let w: BTreeMap<VertexId, u64> = g.vertices().map(|v| (v, 2)).collect();
        assert!(validate_weighting(&cat, &WeightingPolicy::VertexWeights(w)));
    }

    #[test]
    fn constant_zero_policy_is_not_legitimate() {
        let cat = maximal_cliques(&path3()).unwrap();
        let zero = WeightingPolicy::VertexWeights(BTreeMap::new());
        assert!(!validate_weighting(&cat, &zero));
    }

    #[test]
    fn view_as_graph_keeps_isolated_nodes() {
        // Two disjoint triangles: two clique nodes, no edges.
        let g = Graph::from_edges([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        let cg = build_clique_graph(&g, WeightingPolicy::Cardinality).unwrap();
        let view = reduced_subgraph(&cg);
        assert_eq!(view.as_graph().vertex_count(), 2);
        assert!(!view.is_connected());
    }
}
