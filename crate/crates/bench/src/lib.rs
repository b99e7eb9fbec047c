//! Shared fixtures for the pipeline benchmarks.

use chordal_core::{random_chordal, Graph};

/// Deterministic benchmark instances spanning small to mid-size hosts.
pub fn bench_instances() -> Vec<(&'static str, Graph)> {
    vec![
        ("n20", random_chordal(20, 0.3, 11).unwrap()),
        ("n40", random_chordal(40, 0.25, 12).unwrap()),
        ("n80", random_chordal(80, 0.15, 13).unwrap()),
    ]
}
