//! Mycielskian and generalized Mycielskian constructions.
//!
//! Canonical vertex numbering for `mu_t(G)` over a base graph on `n`
//! vertices: the copy of base vertex `i` on level `j` is vertex `j*n + i`,
//! and the root is vertex `n*(t+1)`. Level 0 carries a copy of `G`; for each
//! base edge `{i, k}` and each `0 <= j < t` there are cross edges between
//! level `j` and level `j+1` (`i` to `k` and `k` to `i`); the root is
//! adjacent to every top-level vertex.

use crate::graph::Graph;
use alloc::vec::Vec;
use core::fmt;

/// Provenance of a vertex of a (generalized) Mycielskian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    /// Copy of base vertex `base` on layer `level` (level 0 = original).
    Level { level: usize, base: usize },
    Root,
}

/// A graph together with Mycielskian provenance labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    roles: Vec<VertexRole>,
    t: usize,
    base_n: usize,
}

impl LabeledGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn role(&self, v: usize) -> VertexRole {
        self.roles[v]
    }

    pub fn roles(&self) -> &[VertexRole] {
        &self.roles
    }

    /// Vertex id of the copy of base vertex `i` on level `j`.
    pub fn level_vertex(&self, j: usize, i: usize) -> usize {
        debug_assert!(j <= self.t && i < self.base_n);
        j * self.base_n + i
    }

    pub fn root(&self) -> usize {
        self.base_n * (self.t + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MycielskiError {
    /// `t = 0` is rejected; the construction is used for `t >= 1` only.
    ZeroLayers,
    ZeroIterations,
    VertexCapExceeded { would_be: usize, cap: usize },
}

impl fmt::Display for MycielskiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MycielskiError::ZeroLayers => write!(f, "generalized Mycielskian requires t >= 1"),
            MycielskiError::ZeroIterations => write!(f, "iterated Mycielskian requires p >= 1"),
            MycielskiError::VertexCapExceeded { would_be, cap } => {
                write!(f, "construction would produce {would_be} vertices, over the cap of {cap}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for MycielskiError {}

/// Default vertex cap for [`iterated`].
pub const DEFAULT_VERTEX_CAP: usize = 10_000;

/// The Mycielskian `mu(G)`: shadow copy of every vertex plus a root.
pub fn mycielskian(g: &Graph) -> LabeledGraph {
    generalized_mycielskian(g, 1).expect("t = 1 is always valid")
}

/// The generalized Mycielskian `mu_t(G)` with `t >= 1` shadow layers.
pub fn generalized_mycielskian(g: &Graph, t: usize) -> Result<LabeledGraph, MycielskiError> {
    if t == 0 {
        return Err(MycielskiError::ZeroLayers);
    }
    let n = g.vertex_count();
    let total = n * (t + 1) + 1;
    let root = total - 1;
    let mut out = Graph::new(total);
    for (i, k) in g.edges() {
        out.add_edge(i, k).unwrap();
        for j in 0..t {
            out.add_edge(j * n + i, (j + 1) * n + k).unwrap();
            out.add_edge(j * n + k, (j + 1) * n + i).unwrap();
        }
    }
    for i in 0..n {
        out.add_edge(t * n + i, root).unwrap();
    }
    let mut roles: Vec<VertexRole> = Vec::with_capacity(total);
    for j in 0..=t {
        for i in 0..n {
            let _ = j;
            roles.push(VertexRole::Level { level: j, base: i });
        }
    }
    roles.push(VertexRole::Root);
    Ok(LabeledGraph {
        graph: out,
        roles,
        t,
        base_n: n,
    })
}

/// `p`-fold iterate `mu_t^p(G)`. Only the outermost application keeps role
/// labels; inner provenance is flattened into the level-0 ids.
pub fn iterated(
    g: &Graph,
    t: usize,
    p: usize,
    vertex_cap: usize,
) -> Result<LabeledGraph, MycielskiError> {
    if t == 0 {
        return Err(MycielskiError::ZeroLayers);
    }
    if p == 0 {
        return Err(MycielskiError::ZeroIterations);
    }
    let mut n = g.vertex_count();
    for _ in 0..p {
        n = n * (t + 1) + 1;
        if n > vertex_cap {
            return Err(MycielskiError::VertexCapExceeded { would_be: n, cap: vertex_cap });
        }
    }
    let mut current = g.clone();
    let mut labeled = None;
    for _ in 0..p {
        let next = generalized_mycielskian(&current, t)?;
        current = next.graph().clone();
        labeled = Some(next);
    }
    Ok(labeled.unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn mu_counts() {
        let lg = mycielskian(&families::star(3));
        assert_eq!(lg.graph().vertex_count(), 9);
        assert_eq!(lg.graph().edge_count(), 13);

        let lg = mycielskian(&families::star(2));
        assert_eq!(lg.graph().vertex_count(), 7);
        assert_eq!(lg.graph().edge_count(), 9);
    }

    #[test]
    fn grotzsch() {
        // mu(C_5) is the Grötzsch graph: 11 vertices, 20 edges, triangle-free.
        let lg = mycielskian(&families::cycle(5));
        let g = lg.graph();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 20);
        for u in 0..11 {
            for v in u + 1..11 {
                for w in v + 1..11 {
                    assert!(
                        !(g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w)),
                        "triangle {u},{v},{w}"
                    );
                }
            }
        }
    }

    #[test]
    fn generalized_counts() {
        let lg = generalized_mycielskian(&families::star(2), 2).unwrap();
        assert_eq!(lg.graph().vertex_count(), 10);
        assert_eq!(lg.graph().edge_count(), 13);

        let lg = generalized_mycielskian(&families::star(2), 3).unwrap();
        assert_eq!(lg.graph().vertex_count(), 13);
        assert_eq!(lg.graph().edge_count(), 17);

        assert_eq!(
            generalized_mycielskian(&families::path(3), 0),
            Err(MycielskiError::ZeroLayers)
        );
    }

    #[test]
    fn t1_equals_plain_mycielskian() {
        for g in [families::path(4), families::cycle(5), families::star(3)] {
            assert_eq!(generalized_mycielskian(&g, 1).unwrap(), mycielskian(&g));
        }
    }

    #[test]
    fn structure_invariants() {
        let g = families::cycle(5);
        for t in 1..=3 {
            let lg = generalized_mycielskian(&g, t).unwrap();
            let n = g.vertex_count();
            assert_eq!(lg.graph().vertex_count(), n * (t + 1) + 1);
            assert_eq!(lg.graph().edge_count(), (2 * t + 1) * g.edge_count() + n);
            // Shadow levels are independent sets; level 0 matches g.
            for j in 1..=t {
                for a in 0..n {
                    for b in 0..n {
                        assert!(!lg.graph().has_edge(lg.level_vertex(j, a), lg.level_vertex(j, b)));
                    }
                }
            }
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(lg.graph().has_edge(a, b), g.has_edge(a, b));
                }
            }
            // Root adjacency and distances used by the root-fixing arguments.
            let w = lg.root();
            for i in 0..n {
                assert_eq!(lg.graph().distance(w, lg.level_vertex(t, i)).unwrap(), Some(1));
                if t >= 1 {
                    assert_eq!(
                        lg.graph().distance(w, lg.level_vertex(t - 1, i)).unwrap(),
                        Some(2)
                    );
                }
            }
        }
    }

    #[test]
    fn iterated_counts() {
        let k12 = families::star(2);
        assert_eq!(iterated(&k12, 1, 1, DEFAULT_VERTEX_CAP).unwrap().graph().vertex_count(), 7);
        let lg = iterated(&k12, 1, 2, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(lg.graph().vertex_count(), 15);
        assert_eq!(lg.graph().edge_count(), 34);

        let lg = iterated(&families::cycle(5), 1, 2, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(lg.graph().vertex_count(), 23);
        assert_eq!(lg.graph().edge_count(), 71);

        assert!(matches!(
            iterated(&families::cycle(5), 2, 8, DEFAULT_VERTEX_CAP),
            Err(MycielskiError::VertexCapExceeded { .. })
        ));
    }

    #[test]
    fn isolated_vertices_copied_to_every_level() {
        let g = Graph::new(1);
        let lg = generalized_mycielskian(&g, 2).unwrap();
        assert_eq!(lg.graph().edges(), alloc::vec![(2, 3)]);
    }
}
