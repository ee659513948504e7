//! All-pairs graph distances and the distance-i structure.

use crate::error::{Error, Result};
use crate::graph::Graph;
use nalgebra::DMatrix;
use std::collections::VecDeque;

/// Exact distance structure of a connected graph: the distance matrix, the
/// diameter `D`, and the per-vertex counts `k_i(x) = |Γ_i(x)|`.
///
/// Distances are computed by one BFS per vertex, in integer arithmetic; the
/// distance-i indicator matrices are derived on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>, // row-major n*n
    diameter: usize,
    counts: Vec<Vec<usize>>, // counts[i][x] = k_i(x) for i = 0..=diameter
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn dist(&self, x: usize, y: usize) -> usize {
        self.dist[x * self.n + y] as usize
    }

    /// `k_i(x)`: the number of vertices at distance exactly `i` from `x`.
    pub fn count(&self, i: usize, x: usize) -> usize {
        self.counts[i][x]
    }

    pub fn counts(&self, i: usize) -> &[usize] {
        &self.counts[i]
    }

    /// Distance-i indicator matrix `A_i` as a float matrix.
    pub fn indicator(&self, i: usize) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |x, y| {
            if self.dist[x * self.n + y] as usize == i {
                1.0
            } else {
                0.0
            }
        })
    }
}

/// BFS from every vertex. Fails on disconnected input: the whole analysis
/// assumes connectivity.
pub fn bfs_distances(g: &Graph) -> Result<DistanceData> {
    let n = g.n();
    let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut dist = vec![u32::MAX; n * n];
    let mut diameter = 0usize;

    let mut queue = VecDeque::new();
    for start in 0..n {
        let row = &mut dist[start * n..(start + 1) * n];
        row[start] = 0;
        queue.clear();
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            let dv = row[v];
            for &u in &neighbors[v] {
                if row[u] == u32::MAX {
                    row[u] = dv + 1;
                    queue.push_back(u);
                }
            }
        }
        for &d in row.iter() {
            if d == u32::MAX {
                return Err(Error::NotConnected);
            }
            diameter = diameter.max(d as usize);
        }
    }

    let mut counts = vec![vec![0usize; n]; diameter + 1];
    for x in 0..n {
        for y in 0..n {
            counts[dist[x * n + y] as usize][x] += 1;
        }
    }

    Ok(DistanceData {
        n,
        dist,
        diameter,
        counts,
    })
}
