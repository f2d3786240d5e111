//! Simple undirected graphs with the structural queries the rest of the
//! crate builds on: degrees, BFS distances, twin classes, components and
//! star detection.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

/// Simple undirected graph on vertices `0..n`. No loops, no parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GraphError {}

/// Why a graph has no distinguishing index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexUndefined {
    /// A connected component that is exactly one edge.
    K2Component { u: usize, v: usize },
    /// Two or more isolated vertices.
    MultipleIsolatedVertices { first: usize, second: usize },
}

impl fmt::Display for IndexUndefined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexUndefined::K2Component { u, v } => {
                write!(f, "K_2 component on vertices {u} and {v}")
            }
            IndexUndefined::MultipleIsolatedVertices { first, second } => {
                write!(f, "more than one isolated vertex (e.g. {first} and {second})")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for IndexUndefined {}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: alloc::vec![BTreeSet::new(); n],
        }
    }

    /// Build a graph from an edge iterator. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Insert edge `{u, v}`. Idempotent on duplicates.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = alloc::vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(v);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Shortest-path distance; `None` if `u` and `v` lie in distinct components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::new();
            seen[s] = true;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Partition of the vertices into open-neighborhood equality classes.
    pub fn twin_partition(&self) -> TwinPartition {
        let mut by_nbhd: BTreeMap<&BTreeSet<usize>, Vec<usize>> = BTreeMap::new();
        for v in 0..self.n {
            by_nbhd.entry(&self.adj[v]).or_default().push(v);
        }
        let mut classes: Vec<Vec<usize>> = by_nbhd.into_values().collect();
        classes.sort_by_key(|c| c[0]);
        TwinPartition { n: self.n, classes }
    }

    /// Whether the distinguishing index of this graph is defined: no `K_2`
    /// component and at most one isolated vertex.
    pub fn index_defined(&self) -> Result<(), IndexUndefined> {
        let mut isolated = None;
        for comp in self.components() {
            match comp.as_slice() {
                [v] => match isolated {
                    None => isolated = Some(*v),
                    Some(first) => {
                        return Err(IndexUndefined::MultipleIsolatedVertices {
                            first,
                            second: *v,
                        })
                    }
                },
                [u, v] => return Err(IndexUndefined::K2Component { u: *u, v: *v }),
                _ => {}
            }
        }
        Ok(())
    }

    /// Returns `Some(m)` when the graph is a star `K_{1,m}` (including the
    /// degenerate `K_1` as `m = 0` and `K_2` as `m = 1`), `None` otherwise.
    pub fn as_star(&self) -> Option<usize> {
        match self.n {
            0 => None,
            1 => {
                if self.edge_count() == 0 {
                    Some(0)
                } else {
                    None
                }
            }
            2 => {
                if self.edge_count() == 1 {
                    Some(1)
                } else {
                    None
                }
            }
            n => {
                let m = n - 1;
                if self.edge_count() != m {
                    return None;
                }
                let center = (0..n).find(|&v| self.adj[v].len() == m)?;
                let leaves_ok = (0..n)
                    .filter(|&v| v != center)
                    .all(|v| self.adj[v].len() == 1 && self.adj[v].contains(&center));
                if leaves_ok {
                    Some(m)
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Partition of `V(G)` into classes of vertices with equal open neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl TwinPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Size of the class containing `v`.
    pub fn class_size(&self, v: usize) -> usize {
        self.classes
            .iter()
            .find(|c| c.contains(&v))
            .map_or(0, |c| c.len())
    }

    /// All unordered twin pairs `(x1, x2)` with `x1 < x2`.
    pub fn twin_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for class in &self.classes {
            for i in 0..class.len() {
                for j in i + 1..class.len() {
                    out.push((class[i], class[j]));
                }
            }
        }
        out
    }
}
