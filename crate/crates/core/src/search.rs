//! Seeded corpus hunt for chordal graphs whose reduced clique graph
//! contains an induced cycle of a requested length. Length six is
//! realizable; length five never is, and length seven and up is open
//! territory this tool probes for evidence.
//!
//! Attempts alternate between two instance models: the subtree
//! intersection sampler, and random split graphs, whose reduced clique
//! graphs pick up induced cycles from containment patterns among the
//! independent-set neighborhoods. Cycles of length six are orders of
//! magnitude more frequent in the latter.

use crate::cliquegraph::{build_clique_graph, reduced_subgraph, WeightingPolicy};
use crate::error::Result;
use crate::generators::{random_chordal, Rng};
use crate::graph::{Graph, VertexId};
use crate::structure::{induced_cycles, InducedCycle};

/// Parameters of a cycle hunt. Attempts are scanned in seed order, so a
/// search is reproducible for fixed parameters regardless of `jobs`.
#[derive(Clone, Debug)]
pub struct CycleSearch {
    /// Requested induced cycle length in the reduced clique graph.
    pub length: usize,
    pub seed: u64,
    pub attempts: u64,
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub min_density: f64,
    pub max_density: f64,
    pub jobs: usize,
}

impl CycleSearch {
    pub fn new(length: usize) -> CycleSearch {
        CycleSearch {
            length,
            seed: 1,
            attempts: 200_000,
            min_vertices: 10,
            max_vertices: 16,
            min_density: 0.15,
            max_density: 0.45,
            jobs: 1,
        }
    }
}

/// A found instance: the chordal graph, the induced cycle of clique
/// indices in its reduced clique graph, and the attempt that produced it.
#[derive(Clone, Debug)]
pub struct CycleWitness {
    pub graph: Graph,
    pub cycle: InducedCycle,
    pub attempt: u64,
    pub seed: u64,
}

/// Scans the random chordal corpus for a witness, returning the one with
/// the smallest attempt index within the budget.
pub fn search_reduced_cycle(params: &CycleSearch) -> Result<Option<CycleWitness>> {
    let jobs = params.jobs.max(1);
    if jobs == 1 {
        for attempt in 0..params.attempts {
            if let Some(w) = try_attempt(params, attempt)? {
                return Ok(Some(w));
            }
        }
        return Ok(None);
    }
    // Deterministic sharding: threads race within a block of attempts,
    // and the smallest hit of the block wins before the next block runs.
    let block = (jobs * 256) as u64;
    let mut start = 0;
    while start < params.attempts {
        let end = (start + block).min(params.attempts);
        let hits = std::thread::scope(|scope| -> Result<Vec<CycleWitness>> {
            let mut handles = Vec::new();
            for worker in 0..jobs as u64 {
                let params = params.clone();
                handles.push(scope.spawn(move || -> Result<Option<CycleWitness>> {
                    let mut attempt = start + worker;
                    while attempt < end {
                        if let Some(w) = try_attempt(&params, attempt)? {
                            return Ok(Some(w));
                        }
                        attempt += jobs as u64;
                    }
                    Ok(None)
                }));
            }
            let mut hits = Vec::new();
            for h in handles {
                if let Some(w) = h.join().expect("search worker panicked")? {
                    hits.push(w);
                }
            }
            Ok(hits)
        })?;
        if let Some(best) = hits.into_iter().min_by_key(|w| w.attempt) {
            return Ok(Some(best));
        }
        start = end;
    }
    Ok(None)
}

fn try_attempt(params: &CycleSearch, attempt: u64) -> Result<Option<CycleWitness>> {
    let seed = params.seed.wrapping_add(attempt);
    let mut rng = Rng::new(seed ^ 0xA5A5_5A5A_0F0F_F0F0);
    let g = if attempt.is_multiple_of(2) {
        let kappa = 5 + rng.below(4) as usize;
        let iota = 5 + rng.below(6) as usize;
        let p = 0.3 + 0.2 * rng.f64();
        random_split(kappa, iota, p, &mut rng)
    } else {
        let span = (params.max_vertices - params.min_vertices + 1) as u64;
        let n = params.min_vertices + rng.below(span) as usize;
        let density = params.min_density + (params.max_density - params.min_density) * rng.f64();
        match random_chordal(n, density, seed) {
            Ok(g) => g,
            Err(_) => return Ok(None),
        }
    };
    if !g.is_connected() {
        return Ok(None);
    }
    let cg = build_clique_graph(&g, WeightingPolicy::Cardinality)?;
    if cg.node_count() < params.length {
        return Ok(None);
    }
    let crg = reduced_subgraph(&cg).as_graph();
    let cycles = induced_cycles(&crg, params.length)?;
    Ok(cycles.into_iter().next().map(|cycle| CycleWitness {
        graph: g,
        cycle,
        attempt,
        seed,
    }))
}

/// Random split graph: a clique on `kappa` vertices plus `iota`
/// independent vertices, each adjacent to a random non-empty subset of
/// the clique. Split graphs are chordal, and connected since every
/// vertex touches the clique.
fn random_split(kappa: usize, iota: usize, p: f64, rng: &mut Rng) -> Graph {
    let mut edges = Vec::new();
    for i in 0..kappa as VertexId {
        for j in i + 1..kappa as VertexId {
            edges.push((i, j));
        }
    }
    for t in 0..iota as VertexId {
        let v = kappa as VertexId + t;
        let mut any = false;
        for k in 0..kappa as VertexId {
            if rng.f64() < p {
                edges.push((v, k));
                any = true;
            }
        }
        if !any {
            edges.push((v, rng.below(kappa as u64) as VertexId));
        }
    }
    Graph::from_edges(edges).expect("no self-loops by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_attempts_find_nothing() {
        let mut params = CycleSearch::new(6);
        params.attempts = 0;
        assert!(search_reduced_cycle(&params).unwrap().is_none());
    }

    #[test]
    fn five_cycles_are_never_found() {
        let mut params = CycleSearch::new(5);
        params.attempts = 300;
        params.min_vertices = 8;
        params.max_vertices = 12;
        assert!(search_reduced_cycle(&params).unwrap().is_none());
    }
}
