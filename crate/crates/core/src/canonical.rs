//! Exact isomorphism for small graphs via canonical labeling: iterated
//! degree refinement to split the vertices into invariant color classes,
//! then branch-and-bound over class-respecting labelings for the minimum
//! adjacency bitstring.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest vertex count accepted by the isomorphism machinery.
pub const ISO_GUARD: usize = 12;

/// Search-node budget; highly symmetric inputs beyond it are refused
/// rather than left to run for minutes.
const SEARCH_BUDGET: u64 = 4_000_000;

/// Canonical key: equal exactly for isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    class_sizes: Vec<usize>,
    mask: u128,
}

/// Canonical form of a graph with at most [`ISO_GUARD`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.vertex_count();
    if n > ISO_GUARD {
        return Err(Error::TooLarge(format!(
            "{n} vertices exceed the {ISO_GUARD}-vertex isomorphism guard"
        )));
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut rows = vec![0u16; n];
    for (u, v) in g.edges() {
        let (iu, iv) = (index[&u], index[&v]);
        rows[iu] |= 1 << iv;
        rows[iv] |= 1 << iu;
    }

    let total_bits = (n * n.saturating_sub(1) / 2) as u32;
    let edge_bits = g.edge_count() as u32;
    // Complete and empty graphs have a single labeling class; skip the
    // search their symmetry would make expensive.
    if edge_bits == total_bits || edge_bits == 0 {
        let mask = if edge_bits == 0 {
            0
        } else {
            (1u128 << total_bits) - 1
        };
        return Ok(CanonicalForm {
            n,
            class_sizes: vec![n],
            mask,
        });
    }

    let colors = refine(n, &rows);
    // Vertices grouped by color; target positions follow color order.
    let mut by_color: Vec<(u32, usize)> = colors.iter().copied().zip(0..n).collect();
    by_color.sort_unstable();
    let block_color: Vec<u32> = by_color.iter().map(|&(c, _)| c).collect();
    let mut class_sizes = Vec::new();
    let mut i = 0;
    while i < n {
        let j = (i..n).take_while(|&k| block_color[k] == block_color[i]).count();
        class_sizes.push(j);
        i += j;
    }

    let mut search = MaskSearch {
        rows: &rows,
        colors: &colors,
        block_color: &block_color,
        n,
        total_bits,
        best: u128::MAX,
        nodes: 0,
    };
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search.descend(&mut placed, &mut used, 0, 0)?;
    Ok(CanonicalForm {
        n,
        class_sizes,
        mask: search.best,
    })
}

/// Iterated neighborhood-color refinement (1-WL). The resulting color ids
/// are invariant under isomorphism and ordered canonically.
fn refine(n: usize, rows: &[u16]) -> Vec<u32> {
    let mut colors = vec![0u32; n];
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut around: Vec<u32> = (0..n)
                .filter(|&w| rows[v] >> w & 1 == 1)
                .map(|w| colors[w])
                .collect();
            around.sort_unstable();
            sigs.push((colors[v], around));
        }
        let mut unique = sigs.clone();
        unique.sort();
        unique.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| unique.binary_search(s).unwrap() as u32)
            .collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

struct MaskSearch<'a> {
    rows: &'a [u16],
    colors: &'a [u32],
    block_color: &'a [u32],
    n: usize,
    total_bits: u32,
    best: u128,
    nodes: u64,
}

impl MaskSearch<'_> {
    /// Places vertices position by position, accumulating the adjacency
    /// bitstring left-aligned in `partial` and pruning against the best
    /// complete labeling found so far.
    fn descend(
        &mut self,
        placed: &mut Vec<usize>,
        used: &mut [bool],
        partial: u128,
        bits: u32,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > SEARCH_BUDGET {
            return Err(Error::TooLarge(
                "canonical labeling search budget exceeded".into(),
            ));
        }
        let pos = placed.len();
        if pos == self.n {
            if partial < self.best {
                self.best = partial;
            }
            return Ok(());
        }
        let want = self.block_color[pos];
        for v in 0..self.n {
            if used[v] || self.colors[v] != want {
                continue;
            }
            let mut chunk: u128 = 0;
            for &u in placed.iter() {
                chunk = (chunk << 1) | u128::from(self.rows[v] >> u & 1);
            }
            let next_partial = (partial << pos) | chunk;
            let next_bits = bits + pos as u32;
            if next_partial > self.best >> (self.total_bits - next_bits) {
                continue;
            }
            placed.push(v);
            used[v] = true;
            self.descend(placed, used, next_partial, next_bits)?;
            used[v] = false;
            placed.pop();
        }
        Ok(())
    }
}

/// Exact isomorphism decision for graphs within the size guard.
pub fn graphs_isomorphic(h1: &Graph, h2: &Graph) -> Result<bool> {
    for h in [h1, h2] {
        if h.vertex_count() > ISO_GUARD {
            return Err(Error::TooLarge(format!(
                "{} vertices exceed the {ISO_GUARD}-vertex isomorphism guard",
                h.vertex_count()
            )));
        }
    }
    if h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count() {
        return Ok(false);
    }
    let degrees = |h: &Graph| {
        let mut d: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(h1) != degrees(h2) {
        return Ok(false);
    }
    Ok(canonical_form(h1)? == canonical_form(h2)?)
}
