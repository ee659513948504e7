//! Named graph families, the built-in verification corpus, and seeded random
//! graph generators for sweeps.

use crate::graph::{parse_graph6, Graph};
use rand::Rng;

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete graph is valid")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle is valid")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|v| (v, v + 1)).collect();
    Graph::from_edges(n, &edges).expect("path is valid")
}

/// Star `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star is valid")
}

/// Hypercube `Q_dim` on `2^dim` vertices.
pub fn hypercube(dim: u32) -> Graph {
    let n = 1usize << dim;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..dim {
            let u = v ^ (1 << b);
            if u > v {
                edges.push((v, u));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("hypercube is valid")
}

/// Circulant graph: vertex `i` adjacent to `i ± s` for each step `s`.
pub fn circulant(n: usize, steps: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for &s in steps {
            let u = (v + s) % n;
            if u != v {
                edges.push((v.min(u), v.max(u)));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("circulant is valid")
}

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (5, 7),
        (7, 9),
        (9, 6),
        (6, 8),
        (8, 5),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
    ];
    Graph::from_edges(10, &edges).expect("petersen is valid")
}

/// A connected regular graph with `D = d` that is *not* distance-regular,
/// found by brute-force search over small random regular graphs and frozen
/// here: cubic on 12 vertices, five distinct eigenvalues
/// `{3, 2.5141, 0.5720, -1 (x5), -2.0861}`, diameter 4, harmonic-mean gap
/// `HM - q_3(3) = 9.4737 - 8.2992 = 1.1745`, direct-check residual 0.543.
/// The intersection numbers fail already at distance 1.
pub const NON_DRG_REGULAR_WITNESS_G6: &str = "KAaKA_[GbACQ";

/// One entry of the fixed verification corpus, with its known properties.
pub struct CorpusEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub regular: bool,
    pub drg: bool,
}

/// The built-in corpus: complete graphs, cycles, Petersen, two hypercubes,
/// two stars, and the stored non-DRG regular witness.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut entries = vec![
        CorpusEntry {
            name: "K_2",
            graph: complete(2),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "K_3",
            graph: complete(3),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "K_4",
            graph: complete(4),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "K_5",
            graph: complete(5),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "K_6",
            graph: complete(6),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "C_4",
            graph: cycle(4),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "C_5",
            graph: cycle(5),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "C_6",
            graph: cycle(6),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "C_7",
            graph: cycle(7),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "C_8",
            graph: cycle(8),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "C_9",
            graph: cycle(9),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "Petersen",
            graph: petersen(),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "Q_3",
            graph: hypercube(3),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "Q_4",
            graph: hypercube(4),
            regular: true,
            drg: true,
        },
        CorpusEntry {
            name: "K_1,3",
            graph: star(3),
            regular: false,
            drg: false,
        },
        CorpusEntry {
            name: "K_1,5",
            graph: star(5),
            regular: false,
            drg: false,
        },
    ];
    entries.push(CorpusEntry {
        name: "non-DRG regular witness",
        graph: parse_graph6(NON_DRG_REGULAR_WITNESS_G6).expect("stored witness parses"),
        regular: true,
        drg: false,
    });
    entries
}

/// Seeded random graph generators.
pub mod random {
    use super::*;

    /// Erdős–Rényi `G(n, p)`.
    pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if rng.random::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("gnp edges are valid")
    }

    /// `G(n, p)` conditioned on connectivity (rejection sampling).
    pub fn connected_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
        loop {
            let g = gnp(n, p, rng);
            if g.is_connected() {
                return g;
            }
        }
    }

    /// Random `k`-regular graph by the pairing model; `None` when the pairing
    /// keeps colliding (self-loops/multi-edges) or `n * k` is odd.
    pub fn regular<R: Rng>(n: usize, k: usize, rng: &mut R) -> Option<Graph> {
        if !(n * k).is_multiple_of(2) || k >= n {
            return None;
        }
        'attempt: for _ in 0..200 {
            let mut stubs: Vec<usize> = (0..n * k).map(|i| i / k).collect();
            // Fisher-Yates
            for i in (1..stubs.len()).rev() {
                let j = rng.random_range(0..=i);
                stubs.swap(i, j);
            }
            let mut adj = vec![false; n * n];
            let mut edges = Vec::with_capacity(n * k / 2);
            for pair in stubs.chunks(2) {
                let (u, v) = (pair[0], pair[1]);
                if u == v || adj[u * n + v] {
                    continue 'attempt;
                }
                adj[u * n + v] = true;
                adj[v * n + u] = true;
                edges.push((u, v));
            }
            return Some(Graph::from_edges(n, &edges).expect("pairing produced a simple graph"));
        }
        None
    }

    /// Random connected `k`-regular graph; retries the pairing until the
    /// sample is connected.
    pub fn connected_regular<R: Rng>(n: usize, k: usize, rng: &mut R) -> Option<Graph> {
        for _ in 0..200 {
            if let Some(g) = regular(n, k, rng) {
                if g.is_connected() {
                    return Some(g);
                }
            }
        }
        None
    }
}
