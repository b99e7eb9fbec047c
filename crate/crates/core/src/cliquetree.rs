//! Clique-tree recognition and construction. A spanning tree of the
//! maximal cliques is a clique tree exactly when, for every vertex, the
//! cliques containing it induce a subtree; equivalently, when the tree
//! has maximum weight among spanning trees of the (reduced) clique graph
//! under any legitimate weighting.

use std::collections::{BTreeMap, VecDeque};

use crate::cliquegraph::{build_clique_graph, CliqueGraph, WeightingPolicy};
use crate::error::{Error, Result};
use crate::graph::{delete_vertices, shortest_avoiding_path, Graph, VertexSet};
use crate::oracles::{all_clique_trees, EnumerationBudget};

/// A spanning tree over the clique nodes of a [`CliqueGraph`], stored as
/// indices into its edge list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CliqueTree {
    tree_edges: Vec<usize>,
    total_weight: u64,
}

impl CliqueTree {
    /// Wraps a set of clique-graph edge indices, checking that they form
    /// a spanning tree of the node set.
    pub fn new(cg: &CliqueGraph, mut tree_edges: Vec<usize>) -> Result<CliqueTree> {
        tree_edges.sort_unstable();
        tree_edges.dedup();
        let n = cg.node_count();
        if tree_edges.iter().any(|&i| i >= cg.edges().len()) {
            return Err(Error::InvalidArgument("edge index out of range".into()));
        }
        if n == 0 || tree_edges.len() + 1 != n {
            return Err(Error::InvalidArgument(
                "edge set does not span the clique nodes".into(),
            ));
        }
        let mut dsu = Dsu::new(n);
        for &i in &tree_edges {
            let e = cg.edge(i);
            if !dsu.union(e.a, e.b) {
                return Err(Error::InvalidArgument(
                    "edge set contains a cycle".into(),
                ));
            }
        }
        let total_weight = tree_edges.iter().map(|&i| cg.edge(i).weight).sum();
        Ok(CliqueTree {
            tree_edges,
            total_weight,
        })
    }

    pub fn edge_indices(&self) -> &[usize] {
        &self.tree_edges
    }

    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    /// Tree edges as (a, b) clique-index pairs.
    pub fn edge_pairs(&self, cg: &CliqueGraph) -> Vec<(usize, usize)> {
        self.tree_edges
            .iter()
            .map(|&i| (cg.edge(i).a, cg.edge(i).b))
            .collect()
    }

    fn adjacency(&self, cg: &CliqueGraph) -> BTreeMap<usize, Vec<(usize, usize)>> {
        let mut adj: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for node in 0..cg.node_count() {
            adj.insert(node, Vec::new());
        }
        for &i in &self.tree_edges {
            let e = cg.edge(i);
            adj.get_mut(&e.a).unwrap().push((e.b, i));
            adj.get_mut(&e.b).unwrap().push((e.a, i));
        }
        adj
    }

    /// Edge indices along the unique tree path from `a` to `b`.
    pub fn path_edges(&self, cg: &CliqueGraph, a: usize, b: usize) -> Vec<usize> {
        let adj = self.adjacency(cg);
        let mut prev: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                break;
            }
            for &(w, i) in &adj[&u] {
                if w != a && !prev.contains_key(&w) {
                    prev.insert(w, (u, i));
                    queue.push_back(w);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = b;
        while cur != a {
            let (p, i) = prev[&cur];
            path.push(i);
            cur = p;
        }
        path.reverse();
        path
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// True when, for every host vertex, the clique nodes containing it
/// induce a connected subgraph of the tree.
pub fn is_clique_tree(cg: &CliqueGraph, tree: &CliqueTree) -> Result<bool> {
    if tree.edge_indices().len() + 1 != cg.node_count()
        || tree.edge_indices().iter().any(|&i| i >= cg.edges().len())
    {
        return Err(Error::InvalidArgument(
            "tree does not span the clique catalog".into(),
        ));
    }
    let mut span = Dsu::new(cg.node_count());
    for &i in tree.edge_indices() {
        let e = cg.edge(i);
        if !span.union(e.a, e.b) {
            return Err(Error::InvalidArgument(
                "tree does not span the clique catalog".into(),
            ));
        }
    }
    for v in cg.catalog().vertices() {
        let nodes = cg.catalog().containing(v);
        let index_of: BTreeMap<usize, usize> =
            nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let mut dsu = Dsu::new(nodes.len());
        let mut parts = nodes.len();
        for &i in tree.edge_indices() {
            let e = cg.edge(i);
            if let (Some(&x), Some(&y)) = (index_of.get(&e.a), index_of.get(&e.b)) {
                if dsu.union(x, y) {
                    parts -= 1;
                }
            }
        }
        if parts != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximum-weight spanning tree by greedy selection on weight-descending,
/// lexicographically tie-broken edge order. With `reduced_only` the
/// selection runs over the separating edges only.
pub fn max_weight_spanning_tree(cg: &CliqueGraph, reduced_only: bool) -> Result<CliqueTree> {
    let n = cg.node_count();
    if n == 0 {
        return Err(Error::InvalidArgument("empty clique catalog".into()));
    }
    let mut candidates: Vec<usize> = (0..cg.edges().len())
        .filter(|&i| !reduced_only || cg.edge(i).separating)
        .collect();
    candidates.sort_by_key(|&i| {
        let e = cg.edge(i);
        (std::cmp::Reverse(e.weight), e.a, e.b)
    });
    let mut dsu = Dsu::new(n);
    let mut chosen = Vec::with_capacity(n - 1);
    for i in candidates {
        let e = cg.edge(i);
        if dsu.union(e.a, e.b) {
            chosen.push(i);
            if chosen.len() == n - 1 {
                break;
            }
        }
    }
    if chosen.len() + 1 != n {
        return Err(Error::Disconnected);
    }
    CliqueTree::new(cg, chosen)
}

/// Builds a clique tree of a connected chordal graph as a maximum-weight
/// spanning tree of C_R(G).
pub fn clique_tree(g: &Graph, policy: WeightingPolicy) -> Result<(CliqueGraph, CliqueTree)> {
    let cg = build_clique_graph(g, policy)?;
    let tree = max_weight_spanning_tree(&cg, true)?;
    let ok = is_clique_tree(&cg, &tree).expect("tree spans the catalog by construction");
    assert!(
        ok,
        "maximum-weight spanning tree of the reduced clique graph must be a clique tree"
    );
    Ok((cg, tree))
}

/// For the lexicographic shortest s-avoiding path v_0..v_k from c − c2 to
/// c2 − c, returns the k sets (c ∩ c2) ∪ {v_i, v_{i+1}}; each is a clique
/// of the host whenever the host is chordal.
pub fn clique_sequence(
    g: &Graph,
    c: &VertexSet,
    c2: &VertexSet,
    s: &VertexSet,
) -> Result<Vec<VertexSet>> {
    if c == c2 || !g.is_maximal_clique(c) || !g.is_maximal_clique(c2) {
        return Err(Error::InvalidArgument(
            "arguments must be distinct maximal cliques".into(),
        ));
    }
    let inter = c.intersection(c2);
    if !inter.is_subset(s) {
        return Err(Error::InvalidArgument(
            "s must contain the clique intersection".into(),
        ));
    }
    let path = shortest_avoiding_path(g, s, &c.difference(c2), &c2.difference(c))?
        .ok_or(Error::NoPath)?;
    let sets: Vec<VertexSet> = path
        .windows(2)
        .map(|w| inter.union(&VertexSet::from([w[0], w[1]])))
        .collect();
    for set in &sets {
        assert!(
            g.is_clique(set),
            "intersection joined with consecutive path vertices must be a clique"
        );
    }
    Ok(sets)
}

/// For intersecting cliques `a`, `b` that are not adjacent in C_R(G),
/// constructs a path of C_R(G) from `a` to `b` in which every consecutive
/// intersection properly contains cliques[a] ∩ cliques[b].
///
/// The construction walks the clique sequence of a shortest avoiding
/// path, recursing on consecutive stops that are still non-adjacent
/// (their intersections are strictly larger, so the recursion bottoms
/// out), then shortcuts the resulting walk to a simple path.
pub fn crg_expansion_path(cg: &CliqueGraph, a: usize, b: usize) -> Result<Vec<usize>> {
    let k = cg.node_count();
    if a >= k || b >= k || a == b {
        return Err(Error::InvalidArgument("bad clique indices".into()));
    }
    let inter = cg.catalog().clique(a).intersection(cg.catalog().clique(b));
    if inter.is_empty() || cg.reduced_adjacent(a, b) {
        return Err(Error::InvalidArgument(
            "cliques must intersect and be non-adjacent in the reduced clique graph".into(),
        ));
    }
    let path = expand(cg, a, b, 0)?;
    debug_assert!(path.windows(2).all(|w| {
        cg.reduced_adjacent(w[0], w[1])
            && inter.is_proper_subset(
                &cg.catalog()
                    .clique(w[0])
                    .intersection(cg.catalog().clique(w[1])),
            )
    }));
    Ok(path)
}

fn expand(cg: &CliqueGraph, a: usize, b: usize, depth: usize) -> Result<Vec<usize>> {
    assert!(
        depth <= cg.host().vertex_count(),
        "expansion recursion exceeded the vertex count"
    );
    let ca = cg.catalog().clique(a);
    let cb = cg.catalog().clique(b);
    let s = ca.intersection(cb);
    // Not separating and s non-empty, so an avoiding path exists.
    let sets = clique_sequence(cg.host(), ca, cb, &s)?;
    let mut stops = vec![a];
    for set in &sets {
        let d = cg
            .catalog()
            .first_containing_set(set)
            .expect("every clique extends to a maximal clique");
        stops.push(d);
    }
    stops.push(b);

    let mut walk = vec![a];
    for w in stops.windows(2) {
        let (u, v) = (w[0], w[1]);
        assert_ne!(u, v, "consecutive expansion stops must be distinct cliques");
        if cg.reduced_adjacent(u, v) {
            walk.push(v);
        } else {
            let sub = expand(cg, u, v, depth + 1)?;
            walk.extend_from_slice(&sub[1..]);
        }
    }
    Ok(shortcut_walk(&walk))
}

/// Cuts loops out of a walk, keeping only consecutive pairs of the
/// original; node repetition is removed by jumping to the last revisit.
fn shortcut_walk(walk: &[usize]) -> Vec<usize> {
    let mut path = Vec::new();
    let mut i = 0;
    while i < walk.len() {
        let v = walk[i];
        let last = walk.iter().rposition(|&x| x == v).unwrap();
        path.push(v);
        i = last + 1;
    }
    path
}

/// Minimum edge weight along the tree path between intersecting cliques
/// `a` and `b`, paired with whether that minimum equals σ(a ∩ b). For a
/// clique tree the minimum is never below σ(a ∩ b), and equality holds
/// whenever the pair is adjacent in C_R(G); callers check those laws.
pub fn tree_path_weight_floor(
    cg: &CliqueGraph,
    tree: &CliqueTree,
    a: usize,
    b: usize,
) -> Result<(u64, bool)> {
    if !is_clique_tree(cg, tree)? {
        return Err(Error::InvalidArgument("tree is not a clique tree".into()));
    }
    if a == b || cg.edge_between(a, b).is_none() {
        return Err(Error::InvalidArgument(
            "cliques must be distinct and intersecting".into(),
        ));
    }
    let sigma = cg.policy().evaluate(
        &cg.catalog()
            .clique(a)
            .intersection(cg.catalog().clique(b)),
    );
    let min_weight = tree
        .path_edges(cg, a, b)
        .into_iter()
        .map(|i| cg.edge(i).weight)
        .min()
        .expect("distinct nodes are joined by a non-empty tree path");
    Ok((min_weight, min_weight == sigma))
}

/// Checks that the residues of cliques `d` and `d2` land in different
/// components of G − S, where S is the intersection of the tree edge `e`
/// on the path between them. Returns the verdict so tests can falsify.
pub fn edge_separation_check(
    cg: &CliqueGraph,
    tree: &CliqueTree,
    e: usize,
    d: usize,
    d2: usize,
) -> Result<bool> {
    if !is_clique_tree(cg, tree)? {
        return Err(Error::InvalidArgument("tree is not a clique tree".into()));
    }
    if !tree.edge_indices().contains(&e) {
        return Err(Error::InvalidArgument("edge is not a tree edge".into()));
    }
    if d == d2 || !tree.path_edges(cg, d, d2).contains(&e) {
        return Err(Error::InvalidArgument(
            "tree path between the cliques must use the given edge".into(),
        ));
    }
    let s = &cg.edge(e).intersection;
    let report = delete_vertices(cg.host(), s)?;
    let left = report.components_of_set(&cg.catalog().clique(d).difference(s));
    let right = report.components_of_set(&cg.catalog().clique(d2).difference(s));
    Ok(left.is_disjoint(&right))
}

/// Union of the edge sets of all clique trees, as (a, b) clique-index
/// pairs. Enumerates every spanning tree of C(G), so the budget guard
/// applies; the union always equals the C_R edge set.
pub fn union_of_clique_trees(
    g: &Graph,
    budget: &EnumerationBudget,
) -> Result<Vec<(usize, usize)>> {
    let cg = build_clique_graph(g, WeightingPolicy::Cardinality)?;
    if cg.node_count() > budget.max_nodes {
        return Err(Error::TooLarge(format!(
            "{} maximal cliques exceed the {}-node enumeration guard",
            cg.node_count(),
            budget.max_nodes
        )));
    }
    let trees = all_clique_trees(&cg, budget)?;
    let mut union: Vec<(usize, usize)> = trees
        .iter()
        .flat_map(|t| t.edge_pairs(&cg))
        .collect();
    union.sort_unstable();
    union.dedup();
    Ok(union)
}

/// Tree paths between clique nodes as node sequences, for rendering.
pub fn tree_path_nodes(cg: &CliqueGraph, tree: &CliqueTree, a: usize, b: usize) -> Vec<usize> {
    let mut nodes = vec![a];
    let mut cur = a;
    for i in tree.path_edges(cg, a, b) {
        let e = cg.edge(i);
        cur = if e.a == cur { e.b } else { e.a };
        nodes.push(cur);
    }
    nodes
}
