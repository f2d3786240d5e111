//! Property tests on random small graphs.

mod common;

use mycdist_core::graph::Graph;
use mycdist_core::{families, mycielski};
use proptest::prelude::*;

/// Random simple graph on up to `max_n` vertices.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn handshake(g in arb_graph(10)) {
        let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn distance_metric(g in arb_graph(10)) {
        let n = g.vertex_count();
        for u in 0..n {
            let du = g.distances_from(u);
            prop_assert_eq!(du[u], Some(0));
            for v in 0..n {
                prop_assert_eq!(du[v], g.distances_from(v)[u]);
                // Triangle inequality where all three legs exist.
                for w in 0..n {
                    if let (Some(a), Some(b)) = (du[w], g.distances_from(w)[v]) {
                        if let Some(c) = du[v] {
                            prop_assert!(c <= a + b);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twin_classes_are_equivalence_classes(g in arb_graph(10)) {
        let tp = g.twin_partition();
        let mut covered = vec![0usize; g.vertex_count()];
        for class in tp.classes() {
            for &v in class {
                covered[v] += 1;
            }
            for &u in class {
                for &v in class {
                    prop_assert_eq!(g.neighbor_set(u), g.neighbor_set(v));
                }
            }
        }
        prop_assert!(covered.iter().all(|&c| c == 1));
    }

    #[test]
    fn mycielskian_count_formulas(g in arb_graph(8), t in 1usize..=4) {
        let lg = mycielski::generalized_mycielskian(&g, t).unwrap();
        let n = g.vertex_count();
        prop_assert_eq!(lg.graph().vertex_count(), n * (t + 1) + 1);
        prop_assert_eq!(lg.graph().edge_count(), (2 * t + 1) * g.edge_count() + n);
    }

    #[test]
    fn coloring_roundtrip(g in arb_graph(8), seed in any::<u64>()) {
        // Records out of an EdgeColoring rebuild the same coloring.
        if g.edge_count() > 0 {
            let k = (seed % 3 + 1) as usize;
            let records: Vec<_> = g.edges().into_iter().enumerate()
                .map(|(i, e)| (e, (seed as usize + i) % k + 1))
                .collect();
            let c = mycdist_core::EdgeColoring::from_assignments(&g, records, k).unwrap();
            let c2 = mycdist_core::EdgeColoring::from_assignments(&g, c.records(), k).unwrap();
            prop_assert_eq!(c, c2);
        }
    }
}

#[test]
fn as_star_agrees_with_degree_characterization() {
    // Exhaustive over all graphs on up to 5 vertices, sampled for 6 and 7.
    for n in 0..=5usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let g = Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            let expected = star_by_degree_multiset(&g);
            assert_eq!(g.as_star(), expected, "n={n} mask={mask}");
        }
    }
}

fn star_by_degree_multiset(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let m = n - 1;
    let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v).unwrap()).collect();
    degs.sort_unstable();
    let star = if n == 1 {
        g.edge_count() == 0
    } else {
        g.edge_count() == m && degs[n - 1] == m && degs[..n - 1].iter().all(|&d| d == 1)
    };
    star.then_some(m)
}

#[test]
fn distances_root_levels() {
    for g in [families::path(4), families::cycle(6), families::complete(4)] {
        for t in 1..=3 {
            let lg = mycielski::generalized_mycielskian(&g, t).unwrap();
            let w = lg.root();
            for i in 0..g.vertex_count() {
                assert_eq!(lg.graph().distance(w, lg.level_vertex(t, i)).unwrap(), Some(1));
                assert_eq!(lg.graph().distance(w, lg.level_vertex(t - 1, i)).unwrap(), Some(2));
            }
        }
    }
}
