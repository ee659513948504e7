//! Dev tool: collect connected cubic graphs on 10 vertices up to isomorphism
//! by heavy seeded sampling, and print one graph6 line per class. The known
//! number of isomorphism classes is 19; the run reports how many were found.

use predist::corpus::{petersen, random};
use predist::distance::bfs_distances;
use predist::graph::{encode_graph6, Graph};
use predist::spectral::eigenvalues_symmetric;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn vertex_invariants(g: &Graph) -> Vec<Vec<usize>> {
    let dd = bfs_distances(g).unwrap();
    (0..g.n())
        .map(|v| {
            let mut profile: Vec<usize> = (0..=dd.diameter()).map(|i| dd.count(i, v)).collect();
            let triangles = g
                .neighbors(v)
                .flat_map(|a| g.neighbors(v).map(move |b| (a, b)))
                .filter(|&(a, b)| a < b && g.has_edge(a, b))
                .count();
            profile.push(triangles);
            profile
        })
        .collect()
}

fn graph_key(g: &Graph) -> String {
    // integer invariants only: floats (e.g. eigenvalues) can round either
    // way across labelings and split true classes
    let eig = eigenvalues_symmetric(&g.adjacency_matrix()).unwrap();
    let eig_part: Vec<i64> = eig.iter().map(|v| (v * 1e6).round() as i64).collect();
    let mut inv = vertex_invariants(g);
    inv.sort();
    format!("{eig_part:?}|{inv:?}")
}

fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    let gi = vertex_invariants(g);
    let hi = vertex_invariants(h);
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn extend(
        v: usize,
        n: usize,
        g: &Graph,
        h: &Graph,
        gi: &[Vec<usize>],
        hi: &[Vec<usize>],
        mapping: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == n {
            return true;
        }
        for t in 0..n {
            if used[t] || gi[v] != hi[t] {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(mapping[u], t));
            if consistent {
                mapping[v] = t;
                used[t] = true;
                if extend(v + 1, n, g, h, gi, hi, mapping, used) {
                    return true;
                }
                used[t] = false;
                mapping[v] = usize::MAX;
            }
        }
        false
    }

    extend(0, n, g, h, &gi, &hi, &mut mapping, &mut used)
}

fn main() {
    let samples: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(300_000);
    let mut rng = ChaCha8Rng::seed_from_u64(424242);
    let mut classes: Vec<(String, Graph)> = Vec::new();

    let register = |g: Graph, classes: &mut Vec<(String, Graph)>| {
        let key = graph_key(&g);
        for (k, rep) in classes.iter() {
            if *k == key && isomorphic(&g, rep) {
                return false;
            }
        }
        classes.push((key, g));
        true
    };

    register(petersen(), &mut classes);
    for i in 0..samples {
        if let Some(g) = random::connected_regular(10, 3, &mut rng) {
            register(g, &mut classes);
        }
        if i % 50_000 == 0 {
            eprintln!("after {i} samples: {} classes", classes.len());
        }
    }

    eprintln!("total classes found: {} (expected 19)", classes.len());
    let mut lines: Vec<String> = classes.iter().map(|(_, g)| encode_graph6(g)).collect();
    lines.sort();
    for line in lines {
        println!("{line}");
    }
}
