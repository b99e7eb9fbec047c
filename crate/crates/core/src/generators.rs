//! Instance families: the four-clique counterexample graph, wheel hosts,
//! apex path joins, join products, plain paths and wheels, seeded random
//! chordal graphs from the subtree-intersection model, and the exhaustive
//! corpus of small connected chordal graphs.

use std::collections::BTreeSet;

use crate::canonical::canonical_form;
use crate::chordal::{is_chordal, maximal_cliques};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// Largest vertex count for exhaustive enumeration.
pub const EXHAUSTIVE_GUARD: usize = 6;

const GENERATION_RETRIES: u32 = 64;

/// Deterministic splitmix64 stream; the same seed always reproduces the
/// same graphs, independent of platform.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in 0..n by fixed-point scaling.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        ((u128::from(self.next_u64()) * u128::from(n)) >> 64) as u64
    }

    pub fn f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// The nine-vertex chordal graph whose clique graph is complete on four
/// cliques while its reduced clique graph misses exactly one edge: the
/// two big cliques meet in four vertices yet do not form a separating
/// pair. Built as the union of its four maximal cliques.
pub fn fig2_graph() -> Graph {
    let cliques = [
        VertexSet::from([1, 2, 3]),
        VertexSet::from([2, 3, 4, 6, 8, 9]),
        VertexSet::from([2, 3, 5, 7, 8, 9]),
        VertexSet::from([2, 3, 4, 5, 8, 9]),
    ];
    let g = Graph::from_cliques(&cliques).expect("constant clique data");
    let catalog = maximal_cliques(&g).expect("the reconstruction is chordal");
    let mut expected = cliques.to_vec();
    expected.sort();
    assert_eq!(
        catalog.cliques(),
        expected.as_slice(),
        "the union of the four cliques must have exactly those maximal cliques"
    );
    g
}

/// Clique on n+1 hub vertices with one pendant triangle vertex per
/// consecutive hub pair; its clique graph is the wheel with n spokes.
/// Hub vertices are 0..n-1 plus the apex n; pendant i is n+1+i.
pub fn wheel_host(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("wheel hosts need n >= 3".into()));
    }
    let n32 = n as VertexId;
    let mut edges = Vec::new();
    for i in 0..=n32 {
        for j in i + 1..=n32 {
            edges.push((i, j));
        }
    }
    for i in 0..n32 {
        let pendant = n32 + 1 + i;
        edges.push((pendant, i));
        edges.push((pendant, (i + 1) % n32));
    }
    let g = Graph::from_edges(edges).expect("no self-loops by construction");
    debug_assert!(is_chordal(&g));
    Ok(g)
}

/// Two disjoint paths with `m` and `n` edges plus an apex adjacent to
/// everything. Path one is 0..=m, path two is m+1..=m+1+n, the apex is
/// m+n+2.
pub fn apex_path_join(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidArgument("paths need at least one edge".into()));
    }
    let (m, n) = (m as VertexId, n as VertexId);
    let apex = m + n + 2;
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((i, i + 1));
    }
    for j in 0..n {
        edges.push((m + 1 + j, m + 2 + j));
    }
    for v in 0..apex {
        edges.push((apex, v));
    }
    let g = Graph::from_edges(edges).expect("no self-loops by construction");
    debug_assert!(is_chordal(&g));
    Ok(g)
}

/// Disjoint union of `g` and `h` plus every cross edge. When the id
/// ranges collide, `h` is shifted past `g` first.
pub fn join_product(g: &Graph, h: &Graph) -> Graph {
    let g_max = g.vertices().max();
    let h_min = h.vertices().min();
    let offset = match (g_max, h_min) {
        (Some(gm), Some(hm)) if hm <= gm => gm + 1 - hm,
        _ => 0,
    };
    let h_verts: Vec<VertexId> = h.vertices().map(|v| v + offset).collect();
    let mut edges: Vec<(VertexId, VertexId)> = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
    for u in g.vertices() {
        for &v in &h_verts {
            edges.push((u, v));
        }
    }
    Graph::new(g.vertices().chain(h_verts.iter().copied()), edges)
        .expect("shifted ids cannot collide")
}

/// Path with `edges` edges on vertices 0..=edges.
pub fn path_graph(edges: usize) -> Graph {
    let edges = edges as VertexId;
    Graph::new(0..=edges, (0..edges).map(|i| (i, i + 1))).expect("path data")
}

/// Wheel with `spokes` spokes: a cycle 0..spokes-1 plus the hub vertex
/// `spokes` adjacent to every rim vertex.
pub fn wheel_graph(spokes: usize) -> Result<Graph> {
    if spokes < 3 {
        return Err(Error::InvalidArgument("wheels need at least 3 spokes".into()));
    }
    let n = spokes as VertexId;
    let mut edges: Vec<(VertexId, VertexId)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (n, i)));
    Graph::from_edges(edges)
}

/// Connected chordal graph sampled from the subtree-intersection model:
/// a random host tree, one random subtree per vertex with size driven by
/// `density`, and adjacency exactly when subtrees meet. Resamples until
/// connected, erroring out after the retry budget.
pub fn random_chordal(n: usize, density: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument("need at least one vertex".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidArgument("density must be in [0, 1]".into()));
    }
    if n == 1 {
        return Graph::new([0], []);
    }
    let mut rng = Rng::new(seed);
    for _ in 0..GENERATION_RETRIES {
        let tree = random_tree(n, &mut rng);
        let subtrees: Vec<BTreeSet<usize>> = (0..n)
            .map(|_| random_subtree(&tree, n, density, &mut rng))
            .collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !subtrees[i].is_disjoint(&subtrees[j]) {
                    edges.push((i as VertexId, j as VertexId));
                }
            }
        }
        let g = Graph::new((0..n as VertexId).collect::<Vec<_>>(), edges)
            .expect("no self-loops by construction");
        if g.is_connected() {
            assert!(is_chordal(&g), "subtree intersection graphs are chordal");
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed)
}

/// Random labeled tree on 0..n-1 via a uniform Pruefer sequence.
fn random_tree(n: usize, rng: &mut Rng) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    let add = |adj: &mut Vec<Vec<usize>>, a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    if n == 2 {
        add(&mut adj, 0, 1);
        return adj;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    let mut degree = vec![1usize; n];
    for &a in &seq {
        degree[a] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &a in &seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        add(&mut adj, leaf, a);
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.insert(a);
        }
    }
    let mut rest = leaves.into_iter();
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    add(&mut adj, a, b);
    for ns in &mut adj {
        ns.sort_unstable();
    }
    adj
}

/// Connected random subtree grown from a random root toward a size
/// target of roughly density * n nodes.
fn random_subtree(tree: &[Vec<usize>], n: usize, density: f64, rng: &mut Rng) -> BTreeSet<usize> {
    let target = 1 + (density * n as f64 * rng.f64()).floor() as usize;
    let root = rng.below(n as u64) as usize;
    let mut sub = BTreeSet::from([root]);
    let mut frontier: Vec<usize> = tree[root].clone();
    while sub.len() < target && !frontier.is_empty() {
        let idx = rng.below(frontier.len() as u64) as usize;
        let pick = frontier.swap_remove(idx);
        if sub.insert(pick) {
            frontier.extend(tree[pick].iter().filter(|w| !sub.contains(w)));
        }
    }
    sub
}

/// Every connected chordal graph on exactly `n` labeled vertices,
/// reduced to one representative per isomorphism class and ordered by
/// canonical form.
pub fn exhaustive_chordal(n: usize) -> Result<Vec<Graph>> {
    if n < 1 {
        return Err(Error::InvalidArgument("need at least one vertex".into()));
    }
    if n > EXHAUSTIVE_GUARD {
        return Err(Error::TooLarge(format!(
            "{n} vertices exceed the {EXHAUSTIVE_GUARD}-vertex exhaustive guard"
        )));
    }
    let pairs: Vec<(VertexId, VertexId)> = (0..n as VertexId)
        .flat_map(|i| (i + 1..n as VertexId).map(move |j| (i, j)))
        .collect();
    let mut reps = Vec::new();
    let mut seen = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(0..n as VertexId, edges).expect("no self-loops");
        if !g.is_connected() || !is_chordal(&g) {
            continue;
        }
        let canon = canonical_form(&g)?;
        if seen.insert(canon.clone()) {
            reps.push((canon, g));
        }
    }
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(reps.into_iter().map(|(_, g)| g).collect())
}

/// Parameter record for building any generator family, mirroring the
/// command-line surface.
#[derive(Clone, Debug)]
pub enum GeneratorSpec {
    Fig2,
    WheelHost { n: usize },
    ApexPathJoin { m: usize, n: usize },
    /// Join product of two paths with m and n edges.
    JoinProduct { m: usize, n: usize },
    Path { edges: usize },
    Wheel { spokes: usize },
    RandomChordal { n: usize, density: f64, seed: u64 },
    ExhaustiveChordal { n: usize },
}

impl GeneratorSpec {
    /// Builds the family; every family yields one graph except the
    /// exhaustive corpus.
    pub fn build(&self) -> Result<Vec<Graph>> {
        Ok(match *self {
            GeneratorSpec::Fig2 => vec![fig2_graph()],
            GeneratorSpec::WheelHost { n } => vec![wheel_host(n)?],
            GeneratorSpec::ApexPathJoin { m, n } => vec![apex_path_join(m, n)?],
            GeneratorSpec::JoinProduct { m, n } => {
                vec![join_product(&path_graph(m), &path_graph(n))]
            }
            GeneratorSpec::Path { edges } => vec![path_graph(edges)],
            GeneratorSpec::Wheel { spokes } => vec![wheel_graph(spokes)?],
            GeneratorSpec::RandomChordal { n, density, seed } => {
                vec![random_chordal(n, density, seed)?]
            }
            GeneratorSpec::ExhaustiveChordal { n } => exhaustive_chordal(n)?,
        })
    }
}
