//! Small named graph families used by tests, experiments and the CLI corpus.

use crate::graph::Graph;

/// Star `K_{1,m}`: center `0`, leaves `1..=m`.
pub fn star(m: usize) -> Graph {
    Graph::from_edges(m + 1, (1..=m).map(|i| (0, i))).unwrap()
}

/// Path `P_n` on vertices `0..n`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// A smallest asymmetric graph: a triangle with pendant paths of lengths 1
/// and 2 on two of its corners (6 vertices, 6 edges, trivial automorphism
/// group).
pub fn asymmetric6() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (2, 4), (4, 5)]).unwrap()
}
