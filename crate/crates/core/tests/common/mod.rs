//! Independent oracles for integration tests. Nothing here shares code with
//! the library paths it checks: the eigensolver is a classical Jacobi sweep,
//! the polynomial builder is naive Gram-Schmidt on raw monomial coefficients,
//! and the distance oracle is Floyd-Warshall.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)] // index-parallel loops read clearer here

use nalgebra::DMatrix;
use predist::graph::Graph;

/// Cyclic Jacobi eigenvalue iteration for symmetric matrices; descending.
pub fn jacobi_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let n = m.nrows();
    let mut a = m.clone();
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[(p, q)].abs());
            }
        }
        if off < 1e-13 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
    vals
}

/// Naive Gram-Schmidt construction of the orthogonal system over the
/// discrete measure `(nodes, weights)`, normalized so that the value at
/// `norm_point` equals the squared norm. Coefficients ascending. Safe only
/// for small degree; that is all the corpus needs.
pub fn gram_schmidt_system(
    nodes: &[f64],
    weights: &[f64],
    norm_point: f64,
) -> Vec<Vec<f64>> {
    let d = nodes.len() - 1;
    let ip = |f: &[f64], g: &[f64]| -> f64 {
        nodes
            .iter()
            .zip(weights)
            .map(|(&x, &w)| w * eval(f, x) * eval(g, x))
            .sum()
    };

    let mut polys: Vec<Vec<f64>> = Vec::with_capacity(d + 1);
    for i in 0..=d {
        // monomial x^i
        let mut v = vec![0.0; i + 1];
        v[i] = 1.0;
        for p in &polys {
            let coeff = ip(&v, p) / ip(p, p);
            for (k, &c) in p.iter().enumerate() {
                v[k] -= coeff * c;
            }
        }
        let scale = eval(&v, norm_point) / ip(&v, &v);
        for c in v.iter_mut() {
            *c *= scale;
        }
        polys.push(v);
    }
    polys
}

pub fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Floyd-Warshall all-pairs distances; `None` when disconnected.
pub fn floyd_warshall(g: &Graph) -> Option<Vec<Vec<usize>>> {
    const INF: usize = usize::MAX / 4;
    let n = g.n();
    let mut dist = vec![vec![INF; n]; n];
    for i in 0..n {
        dist[i][i] = 0;
        for j in g.neighbors(i) {
            dist[i][j] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i][k] + dist[k][j];
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }
    if dist.iter().any(|row| row.iter().any(|&d| d >= INF)) {
        None
    } else {
        Some(dist)
    }
}
