//! Backtracking search for automorphisms and color-preserving
//! automorphisms.
//!
//! Candidates are restricted to classes of an iterated refinement seeded by
//! degree, neighbor-degree multisets and distance profiles (plus incident
//! edge colors when a coloring constrains the search). Searches are
//! exhaustive; running out of budget is an explicit error, never a silent
//! partial answer.

use crate::coloring::EdgeColoring;
use crate::graph::Graph;
use crate::mycielski::{self, MycielskiError};
use crate::perm::Permutation;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum number of backtracking nodes (candidate assignments tried).
    pub node_limit: u64,
    /// Stop after this many automorphisms have been emitted.
    pub found_limit: Option<usize>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 50_000_000,
            found_limit: None,
        }
    }
}

impl SearchBudget {
    pub fn with_node_limit(node_limit: u64) -> Self {
        SearchBudget {
            node_limit,
            found_limit: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    /// The budget ran out before the search space was exhausted.
    Truncated { nodes: u64 },
    LengthMismatch { expected: usize, actual: usize },
    /// The coloring does not color the searched graph.
    ShapeMismatch,
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::Truncated { nodes } => {
                write!(f, "search truncated after {nodes} nodes; result inconclusive")
            }
            SearchError::LengthMismatch { expected, actual } => {
                write!(f, "permutation length {actual} does not match vertex count {expected}")
            }
            SearchError::ShapeMismatch => write!(f, "coloring does not match the graph"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SearchError {}

/// True iff `p` preserves adjacency and non-adjacency of `g`.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool, SearchError> {
    if p.len() != g.vertex_count() {
        return Err(SearchError::LengthMismatch {
            expected: g.vertex_count(),
            actual: p.len(),
        });
    }
    // A bijection mapping every edge onto an edge maps the edge set onto
    // itself, so non-adjacency is preserved as well.
    Ok(g.edges().into_iter().all(|e| {
        let (a, b) = p.apply_edge(e);
        g.has_edge(a, b)
    }))
}

fn preserves_colors(c: &EdgeColoring, g: &Graph, p: &Permutation) -> bool {
    g.edges().into_iter().all(|(u, v)| {
        let (a, b) = p.apply_edge((u, v));
        c.color(u, v) == c.color(a, b)
    })
}

/// Stable vertex classes: automorphisms (color-preserving when `coloring`
/// is given) can only map a vertex inside its own class.
fn refine_classes(g: &Graph, coloring: Option<&EdgeColoring>) -> Vec<usize> {
    let n = g.vertex_count();
    // Seed: degree, sorted neighbor degrees, sorted distance profile, and
    // sorted incident colors under the coloring.
    let mut seed: Vec<(usize, Vec<usize>, Vec<usize>, Vec<usize>)> = Vec::with_capacity(n);
    for v in 0..n {
        let mut nbr_degs: Vec<usize> = g.neighbors(v).map(|u| g.neighbor_set(u).len()).collect();
        nbr_degs.sort_unstable();
        let mut dists: Vec<usize> = g
            .distances_from(v)
            .into_iter()
            .map(|d| d.unwrap_or(usize::MAX))
            .collect();
        dists.sort_unstable();
        let mut colors: Vec<usize> = match coloring {
            Some(c) => g.neighbors(v).map(|u| c.color(v, u).unwrap_or(0)).collect(),
            None => Vec::new(),
        };
        colors.sort_unstable();
        seed.push((g.neighbor_set(v).len(), nbr_degs, dists, colors));
    }
    let mut ids = BTreeMap::new();
    let mut class: Vec<usize> = seed
        .iter()
        .map(|s| {
            let next = ids.len();
            *ids.entry(s.clone()).or_insert(next)
        })
        .collect();

    // Refine by neighbor classes (with edge colors) until stable.
    loop {
        let mut sig_ids: BTreeMap<(usize, Vec<(usize, usize)>), usize> = BTreeMap::new();
        let mut next: Vec<usize> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbrs: Vec<(usize, usize)> = g
                .neighbors(v)
                .map(|u| {
                    let color = coloring.and_then(|c| c.color(v, u)).unwrap_or(0);
                    (class[u], color)
                })
                .collect();
            nbrs.sort_unstable();
            let key = (class[v], nbrs);
            let fresh = sig_ids.len();
            next.push(*sig_ids.entry(key).or_insert(fresh));
        }
        if next == class {
            return class;
        }
        class = next;
    }
}

struct Searcher<'a> {
    g: &'a Graph,
    coloring: Option<&'a EdgeColoring>,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    mapping: Vec<usize>,
    mapped: Vec<bool>,
    used: Vec<bool>,
    nodes: u64,
    node_limit: u64,
}

enum Flow {
    Continue,
    Stop,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, coloring: Option<&'a EdgeColoring>, budget: &SearchBudget) -> Self {
        let n = g.vertex_count();
        let class = refine_classes(g, coloring);
        let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            members.entry(class[v]).or_default().push(v);
        }
        // Small classes first: they branch least.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (members[&class[v]].len(), class[v], v));
        let candidates = order.iter().map(|&v| members[&class[v]].clone()).collect();
        Searcher {
            g,
            coloring,
            order,
            candidates,
            mapping: alloc::vec![0; n],
            mapped: alloc::vec![false; n],
            used: alloc::vec![false; n],
            nodes: 0,
            node_limit: budget.node_limit,
        }
    }

    fn consistent(&self, v: usize, img: usize) -> bool {
        for &u in self.order.iter() {
            if !self.mapped[u] {
                continue;
            }
            let adj = self.g.has_edge(v, u);
            if adj != self.g.has_edge(img, self.mapping[u]) {
                return false;
            }
            if adj {
                if let Some(c) = self.coloring {
                    if c.color(v, u) != c.color(img, self.mapping[u]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs<F>(&mut self, pos: usize, emit: &mut F) -> Result<Flow, SearchError>
    where
        F: FnMut(Permutation) -> Flow,
    {
        if pos == self.order.len() {
            let p = Permutation::from_images(self.mapping.clone()).expect("bijection by search");
            return Ok(emit(p));
        }
        let v = self.order[pos];
        for ci in 0..self.candidates[pos].len() {
            let img = self.candidates[pos][ci];
            if self.used[img] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit {
                return Err(SearchError::Truncated { nodes: self.nodes });
            }
            if !self.consistent(v, img) {
                continue;
            }
            self.mapping[v] = img;
            self.mapped[v] = true;
            self.used[img] = true;
            let flow = self.dfs(pos + 1, emit);
            self.mapped[v] = false;
            self.used[img] = false;
            match flow? {
                Flow::Continue => {}
                Flow::Stop => return Ok(Flow::Stop),
            }
        }
        Ok(Flow::Continue)
    }
}

/// Every automorphism of `g` (or the first `found_limit`), identity
/// included.
pub fn enumerate_automorphisms(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<Vec<Permutation>, SearchError> {
    let mut found: Vec<Permutation> = Vec::new();
    let limit = budget.found_limit;
    let mut searcher = Searcher::new(g, None, budget);
    searcher.dfs(0, &mut |p| {
        found.push(p);
        match limit {
            Some(l) if found.len() >= l => Flow::Stop,
            _ => Flow::Continue,
        }
    })?;
    Ok(found)
}

/// A non-identity automorphism of `g` preserving the edge coloring `c`, or
/// `None` as a proof of nonexistence (search space exhausted).
pub fn find_nontrivial_color_preserving(
    g: &Graph,
    c: &EdgeColoring,
    budget: &SearchBudget,
) -> Result<Option<Permutation>, SearchError> {
    if !c.matches_graph(g) {
        return Err(SearchError::ShapeMismatch);
    }
    let mut found: Option<Permutation> = None;
    let mut searcher = Searcher::new(g, Some(c), budget);
    searcher.dfs(0, &mut |p| {
        if p.is_identity() {
            Flow::Continue
        } else {
            found = Some(p);
            Flow::Stop
        }
    })?;
    if let Some(p) = &found {
        // Post-hoc re-check of the search result.
        assert!(is_automorphism(g, p).unwrap() && preserves_colors(c, g, p));
    }
    Ok(found)
}

/// Where automorphisms of `mu_t(g)` can send the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBehaviorReport {
    pub group_order: usize,
    pub root: usize,
    /// `{ phi(root) : phi in Aut(mu_t(g)) }`.
    pub root_images: BTreeSet<usize>,
    pub root_always_fixed: bool,
    /// `u_0^t`, the top-level shadow of the center, when `g` is a star with
    /// a unique center (`m >= 2`).
    pub top_center_shadow: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootBehaviorError {
    Construction(MycielskiError),
    Search(SearchError),
}

impl fmt::Display for RootBehaviorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootBehaviorError::Construction(e) => write!(f, "{e}"),
            RootBehaviorError::Search(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for RootBehaviorError {}

/// Build `mu_t(g)`, enumerate its automorphism group, and report the set of
/// images of the root.
pub fn verify_root_behavior(
    g: &Graph,
    t: usize,
    budget: &SearchBudget,
) -> Result<RootBehaviorReport, RootBehaviorError> {
    let lg = mycielski::generalized_mycielskian(g, t).map_err(RootBehaviorError::Construction)?;
    let autos = enumerate_automorphisms(lg.graph(), budget).map_err(RootBehaviorError::Search)?;
    let root = lg.root();
    let root_images: BTreeSet<usize> = autos.iter().map(|p| p.image(root)).collect();
    let top_center_shadow = match g.as_star() {
        Some(m) if m >= 2 => {
            let center = (0..g.vertex_count())
                .max_by_key(|&v| g.neighbor_set(v).len())
                .unwrap();
            Some(lg.level_vertex(t, center))
        }
        _ => None,
    };
    Ok(RootBehaviorReport {
        group_order: autos.len(),
        root,
        root_always_fixed: root_images.len() == 1 && root_images.contains(&root),
        root_images,
        top_center_shadow,
    })
}
