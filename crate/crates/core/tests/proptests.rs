//! Property tests: graph6 round-trips on arbitrary graphs, and the distance
//! partition / triangle inequality on arbitrary connected graphs.

use predist::distance::bfs_distances;
use predist::graph::{encode_graph6, parse_graph6, Graph};
use proptest::prelude::*;

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for v in 1..n {
                for u in 0..v {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arbitrary_graph(40)) {
        let s = encode_graph6(&g);
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(encode_graph6(&back), s);
    }

    #[test]
    fn distance_structure_is_consistent(g in arbitrary_graph(18)) {
        let Ok(dd) = bfs_distances(&g) else {
            prop_assert!(!g.is_connected());
            return Ok(());
        };
        let n = g.n();
        // partition: every pair ends up in exactly one distance class
        for x in 0..n {
            let total: usize = (0..=dd.diameter()).map(|i| dd.count(i, x)).sum();
            prop_assert_eq!(total, n);
        }
        // symmetry and triangle inequality
        for x in 0..n {
            prop_assert_eq!(dd.dist(x, x), 0);
            for y in 0..n {
                prop_assert_eq!(dd.dist(x, y), dd.dist(y, x));
                for z in 0..n {
                    prop_assert!(dd.dist(x, z) <= dd.dist(x, y) + dd.dist(y, z));
                }
            }
        }
    }

    #[test]
    fn edge_list_collapse_idempotent(g in arbitrary_graph(15)) {
        // feeding each edge twice in both orientations yields the same graph
        let mut text = format!("{}\n", g.n());
        for (u, v) in g.edges() {
            text.push_str(&format!("{u} {v}\n{v} {u}\n"));
        }
        let parsed = predist::parse_edge_list(&text).unwrap();
        prop_assert_eq!(parsed, g);
    }
}
