//! Edge colorings: the data type, the explicit star-Mycielskian colorings,
//! the mimic coloring for non-star Mycielskians, distinguishing
//! verification, and the twin-pair witness check.

use crate::automorphism::{self, SearchBudget, SearchError};
use crate::graph::Graph;
use crate::mycielski::{self, LabeledGraph};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

pub type Color = usize;

/// Total map from the edges of a fixed graph shape to colors `1..=num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    assignment: BTreeMap<(usize, usize), Color>,
    num_colors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    MissingEdge { u: usize, v: usize },
    UnknownEdge { u: usize, v: usize },
    ColorOutOfRange { color: Color, num_colors: usize },
    /// `min_r` and the star colorings need `m >= 2`.
    StarTooSmall { m: usize },
    ZeroLayers,
    /// Mimic coloring on a star without the override flag: the theorem's
    /// guarantee does not hold there.
    MimicOnStar { m: usize },
    /// Mimic coloring needs at least one base color for the root edges.
    MimicWithoutColors,
    /// The coloring does not color the given graph.
    ShapeMismatch,
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::MissingEdge { u, v } => write!(f, "edge {{{u},{v}}} is uncolored"),
            ColoringError::UnknownEdge { u, v } => {
                write!(f, "colored pair {{{u},{v}}} is not an edge of the graph")
            }
            ColoringError::ColorOutOfRange { color, num_colors } => {
                write!(f, "color {color} outside 1..={num_colors}")
            }
            ColoringError::StarTooSmall { m } => {
                write!(f, "star colorings require m >= 2, got m = {m}")
            }
            ColoringError::ZeroLayers => write!(f, "star coloring requires t >= 1"),
            ColoringError::MimicOnStar { m } => {
                write!(
                    f,
                    "mimic coloring of a star K_1,{m} is not guaranteed distinguishing; \
                     pass the override flag to build it anyway"
                )
            }
            ColoringError::MimicWithoutColors => {
                write!(f, "mimic coloring needs a base coloring with at least one color")
            }
            ColoringError::ShapeMismatch => write!(f, "coloring does not match the graph shape"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ColoringError {}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl EdgeColoring {
    /// Build a coloring of `g` from `(edge, color)` records. Every edge of
    /// `g` must appear exactly once; colors must lie in `1..=num_colors`.
    pub fn from_assignments<I>(g: &Graph, records: I, num_colors: usize) -> Result<Self, ColoringError>
    where
        I: IntoIterator<Item = ((usize, usize), Color)>,
    {
        let mut assignment = BTreeMap::new();
        for ((u, v), color) in records {
            if !g.has_edge(u, v) {
                return Err(ColoringError::UnknownEdge { u, v });
            }
            if color < 1 || color > num_colors {
                return Err(ColoringError::ColorOutOfRange { color, num_colors });
            }
            assignment.insert(norm(u, v), color);
        }
        for (u, v) in g.edges() {
            if !assignment.contains_key(&(u, v)) {
                return Err(ColoringError::MissingEdge { u, v });
            }
        }
        Ok(EdgeColoring {
            n: g.vertex_count(),
            assignment,
            num_colors,
        })
    }

    /// All edges colored 1.
    pub fn monochromatic(g: &Graph) -> Self {
        EdgeColoring {
            n: g.vertex_count(),
            assignment: g.edges().into_iter().map(|e| (e, 1)).collect(),
            num_colors: 1,
        }
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        self.assignment.get(&norm(u, v)).copied()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn max_used_color(&self) -> Color {
        self.assignment.values().copied().max().unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.assignment.len()
    }

    /// `(edge, color)` records in lexicographic edge order.
    pub fn records(&self) -> impl Iterator<Item = ((usize, usize), Color)> + '_ {
        self.assignment.iter().map(|(&e, &c)| (e, c))
    }

    /// Whether this coloring colors exactly the edges of `g`.
    pub fn matches_graph(&self, g: &Graph) -> bool {
        self.n == g.vertex_count()
            && self.assignment.len() == g.edge_count()
            && g.edges().iter().all(|&(u, v)| self.assignment.contains_key(&(u, v)))
    }
}

/// An ordered pair of colors, the unit assigned to an "elbow" of edges
/// through a degree-2 twin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorPair {
    pub first: Color,
    pub second: Color,
}

/// Least `r` with `r^2 >= m + 1`.
pub fn min_r(m: usize) -> Result<usize, ColoringError> {
    if m < 2 {
        return Err(ColoringError::StarTooSmall { m });
    }
    let mut r = 1;
    while r * r < m + 1 {
        r += 1;
    }
    Ok(r)
}

/// All `r^2` ordered pairs of colors `1..=r` in lexicographic order.
pub fn pair_sequence(r: usize) -> Vec<ColorPair> {
    let mut out = Vec::with_capacity(r * r);
    for first in 1..=r {
        for second in 1..=r {
            out.push(ColorPair { first, second });
        }
    }
    out
}

/// The explicit distinguishing coloring of `mu(K_{1,m})` with `min_r(m)`
/// colors.
pub fn star_mu_coloring(m: usize) -> Result<(LabeledGraph, EdgeColoring), ColoringError> {
    star_mut_coloring(m, 1)
}

/// The explicit distinguishing coloring of `mu_t(K_{1,m})` with `min_r(m)`
/// colors.
///
/// The edge set decomposes into per-level elbow families: the elbow of leaf
/// `i` on level `alpha` is the ordered edge pair running from the center
/// spine above it, through `u_i^alpha`, to the center spine below it (the
/// root `w` playing "above" on the top level). Elbows on levels below `t`
/// receive the ordered color pairs `p_1..p_m`; top-level elbows receive
/// `p_2..p_{m+1}`; the spine edge `u_0^t w` receives color 1. The offset
/// between the two families is what pins the root.
pub fn star_mut_coloring(m: usize, t: usize) -> Result<(LabeledGraph, EdgeColoring), ColoringError> {
    let r = min_r(m)?;
    if t == 0 {
        return Err(ColoringError::ZeroLayers);
    }
    let base = crate::families::star(m);
    let lg = mycielski::generalized_mycielskian(&base, t).expect("t >= 1");
    let w = lg.root();
    let pairs = pair_sequence(r);
    let mut records: Vec<((usize, usize), Color)> = Vec::new();
    for i in 1..=m {
        for alpha in 0..t {
            // i-th elbow of L_alpha gets pair p_i.
            let p = pairs[i - 1];
            let upper = lg.level_vertex(alpha + 1, 0);
            let mid = lg.level_vertex(alpha, i);
            let lower = if alpha == 0 {
                lg.level_vertex(0, 0)
            } else {
                lg.level_vertex(alpha - 1, 0)
            };
            records.push(((upper, mid), p.first));
            records.push(((mid, lower), p.second));
        }
        // i-th elbow of L_t gets pair p_{i+1}.
        let p = pairs[i];
        let mid = lg.level_vertex(t, i);
        let lower = lg.level_vertex(t - 1, 0);
        records.push(((w, mid), p.first));
        records.push(((mid, lower), p.second));
    }
    records.push(((lg.level_vertex(t, 0), w), 1));
    let coloring = EdgeColoring::from_assignments(lg.graph(), records, r)?;
    Ok((lg, coloring))
}

/// The "mimic" coloring of `mu_t(G)`: every cross edge inherits the color of
/// the base edge that generated it, and all root edges get color 1.
///
/// For non-star `G` with a distinguishing base coloring, the result is a
/// distinguishing coloring of `mu_t(G)` with the same number of colors. On
/// stars that guarantee fails, so stars are refused unless `override_star`
/// is set.
pub fn mimic_mut_coloring(
    g: &Graph,
    c: &EdgeColoring,
    t: usize,
    override_star: bool,
) -> Result<(LabeledGraph, EdgeColoring), ColoringError> {
    if t == 0 {
        return Err(ColoringError::ZeroLayers);
    }
    if !c.matches_graph(g) {
        return Err(ColoringError::ShapeMismatch);
    }
    if g.edge_count() == 0 || c.num_colors() == 0 {
        return Err(ColoringError::MimicWithoutColors);
    }
    if let Some(m) = g.as_star() {
        if !override_star {
            return Err(ColoringError::MimicOnStar { m });
        }
    }
    let lg = mycielski::generalized_mycielskian(g, t).expect("t >= 1");
    let n = g.vertex_count();
    let w = lg.root();
    let mut records: Vec<((usize, usize), Color)> = Vec::new();
    for ((i, k), color) in c.records() {
        records.push(((i, k), color));
        for j in 1..=t {
            records.push(((lg.level_vertex(j - 1, i), lg.level_vertex(j, k)), color));
            records.push(((lg.level_vertex(j - 1, k), lg.level_vertex(j, i)), color));
        }
    }
    for i in 0..n {
        records.push(((lg.level_vertex(t, i), w), 1));
    }
    let coloring = EdgeColoring::from_assignments(lg.graph(), records, c.num_colors().max(1))?;
    Ok((lg, coloring))
}

/// True iff no non-trivial automorphism of `g` preserves `c`, by exhaustive
/// search. Budget exhaustion is an error, never a verdict.
pub fn is_distinguishing(
    g: &Graph,
    c: &EdgeColoring,
    budget: &SearchBudget,
) -> Result<bool, SearchError> {
    Ok(automorphism::find_nontrivial_color_preserving(g, c, budget)?.is_none())
}

/// Per-twin-pair outcome of the twin witness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPairWitness {
    pub x1: usize,
    pub x2: usize,
    /// A common neighbor `v` with `c(v x1) != c(v x2)`, when one exists.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinLemmaReport {
    pub pairs: Vec<TwinPairWitness>,
}

impl TwinLemmaReport {
    /// True when every twin pair has a color-splitting common neighbor.
    /// A distinguishing coloring must make this true.
    pub fn all_witnessed(&self) -> bool {
        self.pairs.iter().all(|p| p.witness.is_some())
    }
}

/// For every twin pair of `g`, look for a common neighbor whose two edges to
/// the pair carry different colors.
pub fn check_twin_lemma(g: &Graph, c: &EdgeColoring) -> TwinLemmaReport {
    let pairs = g
        .twin_partition()
        .twin_pairs()
        .into_iter()
        .map(|(x1, x2)| {
            let witness = g
                .neighbors(x1)
                .find(|&v| c.color(v, x1) != c.color(v, x2));
            TwinPairWitness { x1, x2, witness }
        })
        .collect();
    TwinLemmaReport { pairs }
}
