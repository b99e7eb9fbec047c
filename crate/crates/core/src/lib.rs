//! Clique graphs, reduced clique graphs and clique trees of chordal
//! graphs, together with the brute-force oracles and instance generators
//! used to verify their structure theory at desk scale.
//!
//! The central objects: for a chordal graph G, the clique graph C(G)
//! joins maximal cliques with non-empty intersection, and the reduced
//! clique graph keeps only the separating pairs among them. A spanning
//! tree of the maximal cliques is a clique tree exactly when it has
//! maximum weight under any legitimate intersection weighting, and the
//! reduced clique graph is exactly the union of all clique trees.

#![forbid(unsafe_code)]

pub mod canonical;
pub mod chordal;
pub mod cliquegraph;
pub mod cliquetree;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod search;
pub mod structure;

pub use canonical::{canonical_form, graphs_isomorphic, CanonicalForm, ISO_GUARD};
pub use chordal::{
    is_chordal, is_perfect_elimination_order, maximal_cliques, mcs_order, CliqueCatalog,
    EliminationOrder,
};
pub use cliquegraph::{
    build_clique_graph, is_separating_pair, reduced_subgraph, validate_weighting, CliqueGraph,
    CliqueGraphEdge, CliqueGraphView, WeightingPolicy,
};
pub use cliquetree::{
    clique_sequence, clique_tree, crg_expansion_path, edge_separation_check, is_clique_tree,
    max_weight_spanning_tree, tree_path_nodes, tree_path_weight_floor, union_of_clique_trees,
    CliqueTree,
};
pub use error::{Error, Result};
pub use generators::{
    apex_path_join, exhaustive_chordal, fig2_graph, join_product, path_graph, random_chordal,
    wheel_graph, wheel_host, GeneratorSpec, Rng, EXHAUSTIVE_GUARD,
};
pub use graph::{
    connected_components, delete_vertices, shortest_avoiding_path, Graph, SeparatorReport,
    VertexId, VertexSet,
};
pub use oracles::{
    all_clique_trees, all_spanning_trees, definition_direct_crg, spanning_tree_count,
    verify_theorem2_instance, ClauseReport, EnumerationBudget, Theorem2Report,
};
pub use search::{search_reduced_cycle, CycleSearch, CycleWitness};
pub use structure::{
    induced_cycles, is_cycle_graph, minimal_edges, sb_check, verify_trichotomy, InducedCycle,
    TrichotomyCase, TrichotomyVerdict,
};
