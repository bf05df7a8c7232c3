//! Shared fixtures for the benchmarks.

use turan3_core::patterns::{blowup_balanced, Pattern};
use turan3_core::Hypergraph3;

/// A dense-ish 8-vertex graph with trivial symmetry, the common case the
/// canonical search sees during enumeration.
pub fn dense_irregular_8() -> Hypergraph3 {
    Hypergraph3::new(
        8,
        &[
            [0, 1, 2],
            [0, 1, 3],
            [0, 2, 4],
            [0, 3, 5],
            [0, 4, 6],
            [1, 2, 5],
            [1, 3, 6],
            [1, 4, 7],
            [2, 3, 7],
            [2, 5, 6],
            [3, 4, 5],
            [4, 5, 7],
            [5, 6, 7],
        ],
    )
    .unwrap()
}

/// Worst case for the embedding search in the acceptance scope: the tight
/// 11-cycle minus an edge inside the doubled 8-cycle on 16 vertices.
pub fn widest_blowup() -> (Hypergraph3, Hypergraph3) {
    let host = blowup_balanced(&Pattern::tight_cycle_minus(8).unwrap().graph, 2).unwrap();
    let pattern = Pattern::tight_cycle_minus(11).unwrap().graph;
    (host, pattern)
}
