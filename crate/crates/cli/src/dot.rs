//! Graphviz DOT export with a fixed edge-color palette.

use mycdist_core::coloring::EdgeColoring;
use mycdist_core::graph::Graph;
use mycdist_core::mycielski::VertexRole;
use std::fmt::Write as _;

/// Colors 1..=6 map to this palette, matching the figure conventions for
/// small indices; higher colors fall back to gray with a numeric label.
pub const PALETTE: [&str; 6] = ["red", "blue", "black", "green", "orange", "purple"];

pub fn color_name(color: usize) -> &'static str {
    if (1..=PALETTE.len()).contains(&color) {
        PALETTE[color - 1]
    } else {
        "gray"
    }
}

/// Render `g` as undirected DOT, edges styled by `coloring` and vertices by
/// `roles` when given.
pub fn export(
    g: &Graph,
    coloring: Option<&EdgeColoring>,
    roles: Option<&[(usize, VertexRole)]>,
) -> String {
    let mut out = String::from("graph g {\n");
    if let Some(roles) = roles {
        for &(id, role) in roles {
            match role {
                VertexRole::Root => {
                    writeln!(out, "  {id} [shape=box, label=\"w\"];").unwrap();
                }
                VertexRole::Level { level, base } => {
                    writeln!(out, "  {id} [label=\"u{base}^{level}\"];").unwrap();
                }
            }
        }
    }
    for (u, v) in g.edges() {
        match coloring.and_then(|c| c.color(u, v)) {
            Some(color) if color <= PALETTE.len() => {
                writeln!(out, "  {u} -- {v} [color=\"{}\"];", color_name(color)).unwrap();
            }
            Some(color) => {
                writeln!(out, "  {u} -- {v} [color=\"gray\", label=\"{color}\"];").unwrap();
            }
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
