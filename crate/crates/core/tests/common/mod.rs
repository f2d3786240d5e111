//! Brute-force oracles shared by the integration suites. These stay
//! independent of the search code they check: permutations come from plain
//! enumeration of all n! bijections, colorings from all k^|E| assignments.
#![allow(dead_code)]

use mycdist_core::coloring::EdgeColoring;
use mycdist_core::graph::Graph;
use mycdist_core::perm::Permutation;
use mycdist_core::{families, mycielski};

/// All automorphisms of `g` by filtering every bijection of `0..n`.
pub fn brute_force_automorphisms(g: &Graph) -> Vec<Permutation> {
    let n = g.vertex_count();
    let mut images: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    permute(&mut images, 0, &mut |imgs| {
        let p = Permutation::from_images(imgs.to_vec()).unwrap();
        let ok = g.edges().into_iter().all(|e| {
            let (a, b) = p.apply_edge(e);
            g.has_edge(a, b)
        });
        if ok {
            out.push(p);
        }
    });
    out
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

pub fn preserves_colors(g: &Graph, c: &EdgeColoring, p: &Permutation) -> bool {
    g.edges().into_iter().all(|(u, v)| {
        let (a, b) = p.apply_edge((u, v));
        c.color(u, v) == c.color(a, b)
    })
}

pub fn is_distinguishing_brute(g: &Graph, c: &EdgeColoring, autos: &[Permutation]) -> bool {
    autos
        .iter()
        .filter(|p| !p.is_identity())
        .all(|p| !preserves_colors(g, c, p))
}

/// Unpruned decision oracle: enumerate all `k^|E|` colorings.
pub fn brute_force_exists_distinguishing(g: &Graph, k: usize) -> bool {
    let autos = brute_force_automorphisms(g);
    let edges = g.edges();
    let m = edges.len();
    let mut colors = vec![1usize; m];
    loop {
        let c = EdgeColoring::from_assignments(
            g,
            edges.iter().copied().zip(colors.iter().copied()),
            k,
        )
        .unwrap();
        if is_distinguishing_brute(g, &c, &autos) {
            return true;
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            if colors[i] < k {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// The small non-star corpus used across the acceptance criteria.
pub fn nonstar_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("P4", families::path(4)),
        ("P5", families::path(5)),
        ("P6", families::path(6)),
        ("C4", families::cycle(4)),
        ("C5", families::cycle(5)),
        ("C6", families::cycle(6)),
        ("K4", families::complete(4)),
        ("asym6", families::asymmetric6()),
    ]
}

#[allow(dead_code)]
pub fn mu_t(g: &Graph, t: usize) -> Graph {
    mycielski::generalized_mycielskian(g, t).unwrap().into_graph()
}
