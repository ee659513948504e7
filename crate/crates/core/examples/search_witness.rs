//! Dev tool: brute-force search for small connected regular graphs with
//! D = d that are not distance-regular (strict harmonic-mean gap).

use predist::characterize::{adjacency_gate, excess_means};
use predist::config::Tolerances;
use predist::corpus::random;
use predist::distance::bfs_distances;
use predist::graph::encode_graph6;
use predist::orthopoly::build_ortho_system;
use predist::spectral::{eigenvalues_symmetric, group_spectrum, SpectrumKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(20260810);
    let mut found = 0usize;

    'outer: for n in [8usize, 9, 10, 11, 12, 13, 14] {
        for k in [3usize, 4, 5] {
            if !(n * k).is_multiple_of(2) || k >= n {
                continue;
            }
            let mut attempts = 0usize;
            while attempts < 40_000 {
                attempts += 1;
                let Some(g) = random::connected_regular(n, k, &mut rng) else {
                    continue;
                };
                let Ok(dd) = bfs_distances(&g) else { continue };
                let Ok(raw) = eigenvalues_symmetric(&g.adjacency_matrix()) else {
                    continue;
                };
                let Ok(spec) = group_spectrum(&raw, SpectrumKind::Adjacency, tol.grouping) else {
                    continue;
                };
                if spec.d() != dd.diameter() {
                    continue;
                }
                let Ok(sys) = build_ortho_system(&spec) else {
                    continue;
                };
                let Ok(gate) = adjacency_gate(&g, &dd, &sys, &tol) else {
                    continue;
                };
                if !gate.equality && gate.hm_gap > 1e-3 && !gate.direct_check {
                    let means = excess_means(&dd).unwrap();
                    println!(
                        "WITNESS n={} k={} D=d={} g6={} hm={} target={} gap={:.6} am={} residual={:.3e}",
                        n,
                        k,
                        gate.d,
                        encode_graph6(&g),
                        gate.hm,
                        gate.target,
                        gate.hm_gap,
                        means.am,
                        gate.direct_residual
                    );
                    found += 1;
                    if found >= 8 {
                        break 'outer;
                    }
                }
            }
            eprintln!("n={n} k={k}: {attempts} attempts, {found} witnesses so far");
        }
    }
}
