//! The characterization gates: harmonic/arithmetic-mean equalities against
//! spectrum-only targets, the direct matrix identities they are equivalent
//! to, and distance-regularity verdicts, for both the adjacency and the
//! Laplacian path. Also the census scanner that sweeps graph6 streams for
//! equality graphs.

use crate::config::Tolerances;
use crate::distance::{bfs_distances, DistanceData};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};
use crate::numfmt::round12;
use crate::orthopoly::{build_ortho_system, OrthoSystem};
use crate::spectral::{
    eigenvalues_symmetric, group_spectrum, pd_closed_form, rd_closed_form, SpectrumKind,
};
use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Arithmetic and harmonic means of the co-excess numbers
/// `n - k_D(x)` (the count of vertices *not* at maximum distance from `x`,
/// including `x` itself).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeanReport {
    /// `n - k_D(x)` per vertex; every entry is at least 1.
    pub values: Vec<usize>,
    pub am: f64,
    pub hm: f64,
    pub all_equal: bool,
    /// Number of vertices with `k_D(x) = 0`, i.e. eccentricity below the
    /// diameter. Those contribute the full `n` to the means.
    pub below_diameter: usize,
}

pub fn excess_means(dd: &DistanceData) -> Result<MeanReport> {
    let n = dd.n();
    let diameter = dd.diameter();
    if diameter == 0 {
        return Err(Error::TooSmall);
    }
    let values: Vec<usize> = (0..n).map(|x| n - dd.count(diameter, x)).collect();
    let below_diameter = (0..n).filter(|&x| dd.count(diameter, x) == 0).count();
    let am = values.iter().sum::<usize>() as f64 / n as f64;
    let hm = n as f64 / values.iter().map(|&v| 1.0 / v as f64).sum::<f64>();
    let all_equal = values.windows(2).all(|w| w[0] == w[1]);
    Ok(MeanReport {
        values,
        am,
        hm,
        all_equal,
        below_diameter,
    })
}

/// Verdicts of one gate run: the scalar harmonic-mean equality against the
/// spectrum-only target, the equivalent matrix identity, and the combined
/// distance-regularity verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GateReport {
    pub kind: SpectrumKind,
    pub d: usize,
    pub diameter: usize,
    /// `q_{D-1}(λ_0)` for the adjacency kind, `s_{D-1}(0)` for the Laplacian.
    pub target: f64,
    pub hm: f64,
    pub am: f64,
    /// `HM - target`; nonnegative up to rounding.
    pub hm_gap: f64,
    /// Scalar gate: `|HM - target| <= tol_eq * target`.
    pub equality: bool,
    /// Matrix gate: `A_D = Σ_{i=D}^d p_i(M)` entrywise within the matrix
    /// tolerance.
    pub direct_check: bool,
    pub direct_residual: f64,
    /// Distance-regular: requires `D = d` together with equality.
    pub drg: bool,
    /// Laplacian kind with `D = 2` and equality forces regularity.
    pub regular_implied: bool,
    pub warnings: Vec<String>,
}

/// The adjacency-path gate. Requires a connected *regular* graph; irregular
/// input is refused with a pointer to the Laplacian gate.
pub fn adjacency_gate(
    g: &Graph,
    dd: &DistanceData,
    sys: &OrthoSystem,
    tol: &Tolerances,
) -> Result<GateReport> {
    if sys.kind() != SpectrumKind::Adjacency {
        return Err(Error::Inconsistent(
            "adjacency_gate needs an adjacency system".into(),
        ));
    }
    let stats = g.degree_stats();
    if !stats.is_regular {
        return Err(Error::IrregularAdjacency {
            min: stats.min(),
            max: stats.max(),
        });
    }
    run_gate(g, dd, sys, tol)
}

/// The Laplacian-path gate; regularity is not required.
pub fn laplacian_gate(
    g: &Graph,
    dd: &DistanceData,
    sys: &OrthoSystem,
    tol: &Tolerances,
) -> Result<GateReport> {
    if sys.kind() != SpectrumKind::Laplacian {
        return Err(Error::Inconsistent(
            "laplacian_gate needs a Laplacian system".into(),
        ));
    }
    run_gate(g, dd, sys, tol)
}

fn run_gate(
    g: &Graph,
    dd: &DistanceData,
    sys: &OrthoSystem,
    tol: &Tolerances,
) -> Result<GateReport> {
    let kind = sys.kind();
    let d = sys.d();
    let diameter = dd.diameter();
    if diameter > d {
        return Err(Error::Inconsistent(format!(
            "diameter {diameter} exceeds d = {d}; a valid spectrum has D <= d \
             (grouping tolerance too coarse?)"
        )));
    }
    let means = excess_means(dd)?;
    let mut warnings = Vec::new();

    let target = sys.sum_value_at_norm(diameter - 1);
    let equality = (means.hm - target).abs() <= tol.equality * target;
    let am_equality = (means.am - target).abs() <= tol.equality * target;

    let m = match kind {
        SpectrumKind::Adjacency => g.adjacency_matrix(),
        SpectrumKind::Laplacian => g.laplacian_matrix(),
    };
    // A_D = Σ_{i=D}^d p_i(M) tested in its complement form
    // q_(D-1)(M) = J - A_D, which the full-sum law makes identical on the
    // gate's domain and which only touches the low-degree matrices
    let partial = sys.partial_sum_matrix(&m, diameter - 1);
    let a_d = dd.indicator(diameter);
    let complement = a_d.map(|v| 1.0 - v);
    let direct_residual = max_abs_diff(&partial, &complement);
    let direct_check = direct_residual <= tol.matrix;

    if equality != direct_check {
        warnings.push(format!(
            "scalar and matrix gates disagree: |HM - target| = {:.3e} vs direct residual {:.3e}; \
             the theorem makes them coincide, so this is numerical",
            (means.hm - target).abs(),
            direct_residual
        ));
    }
    if am_equality != equality {
        warnings.push(format!(
            "AM and HM gates disagree: AM gap {:.3e}, HM gap {:.3e}",
            (means.am - target).abs(),
            (means.hm - target).abs()
        ));
    }
    if means.below_diameter > 0 {
        warnings.push(format!(
            "{} vertices have no vertex at distance D = {diameter} and contribute n to the means",
            means.below_diameter
        ));
    }

    let drg = diameter == d && equality;

    match kind {
        SpectrumKind::Adjacency => {
            // cross-check against the average-excess form: when D = d the
            // mean of k_D(x) must equal the spectrum-only p_d(λ_0)
            if diameter == d {
                let pdk = pd_closed_form(sys.spectrum())?;
                let avg_excess = g.n() as f64 - means.am;
                let am_excess_equal = (avg_excess - pdk).abs() <= tol.equality * pdk;
                if am_excess_equal != equality {
                    warnings.push(format!(
                        "average-excess test disagrees with the harmonic gate: \
                         mean |Γ_d(x)| = {avg_excess} vs spectral excess {pdk}"
                    ));
                }
            }
        }
        SpectrumKind::Laplacian => {
            // the verdict-relevant cross-check: at D = d, the target must
            // agree with n - r_d(0) computed from the spectrum alone
            if diameter == d {
                let rd = rd_closed_form(sys.spectrum())?;
                let closed = g.n() as f64 - rd;
                if (sys.sum_value_at_norm(d - 1) - closed).abs() > 1e-8 * g.n() as f64 {
                    warnings.push(format!(
                        "closed-form s_(d-1)(0) = {closed} disagrees with the built system's {}",
                        sys.sum_value_at_norm(d - 1)
                    ));
                }
            }
        }
    }

    let regular_implied = kind == SpectrumKind::Laplacian && diameter == 2 && equality;
    if regular_implied && !g.degree_stats().is_regular {
        warnings.push(
            "Laplacian equality at D = 2 implies regularity, but the degrees are not all equal; \
             numerical inconsistency"
                .into(),
        );
    }

    Ok(GateReport {
        kind,
        d,
        diameter,
        target,
        hm: means.hm,
        am: means.am,
        hm_gap: means.hm - target,
        equality,
        direct_check,
        direct_residual,
        drg,
        regular_implied,
        warnings,
    })
}

/// The three equivalent spectral-excess tests for a regular graph, bundled:
/// the harmonic-mean form, the average-excess form, and the direct
/// `p_d(A) = A_d` matrix identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralExcessSummary {
    pub n: usize,
    pub d: usize,
    pub diameter: usize,
    pub degree: f64,
    /// Mean of `|Γ_D(x)|`.
    pub average_excess: f64,
    pub hm: f64,
    pub am: f64,
    /// `p_d(λ_0)` from the spectrum-only formula.
    pub spectral_excess: f64,
    /// `q_{d-1}(λ_0) = n - p_d(λ_0)`.
    pub target: f64,
    /// Harmonic-mean test: `D = d` and `HM = q_{d-1}(λ_0)`.
    pub drg_harmonic: bool,
    /// Average-excess test: `D = d` and mean `|Γ_d(x)| = p_d(λ_0)`.
    pub drg_average: bool,
    /// Matrix test: `D = d` and `p_d(A) = A_d`.
    pub drg_matrix: bool,
    pub agree: bool,
    pub warnings: Vec<String>,
}

pub fn spectral_excess_summary(g: &Graph, tol: &Tolerances) -> Result<SpectralExcessSummary> {
    let stats = g.degree_stats();
    if !stats.is_regular {
        return Err(Error::IrregularAdjacency {
            min: stats.min(),
            max: stats.max(),
        });
    }
    let dd = bfs_distances(g)?;
    let raw = eigenvalues_symmetric(&g.adjacency_matrix())?;
    let spectrum = group_spectrum(&raw, SpectrumKind::Adjacency, tol.grouping)?;
    let sys = build_ortho_system(&spectrum)?;
    let means = excess_means(&dd)?;

    let n = g.n();
    let d = sys.d();
    let diameter = dd.diameter();
    let spectral_excess = pd_closed_form(&spectrum)?;
    let target = sys.sum_value_at_norm(d.saturating_sub(1));
    let average_excess = n as f64 - means.am;

    let drg_harmonic = diameter == d && (means.hm - target).abs() <= tol.equality * target;
    let drg_average =
        diameter == d && (average_excess - spectral_excess).abs() <= tol.equality * spectral_excess;
    let drg_matrix = diameter == d && {
        let mats = sys.matrices(&g.adjacency_matrix());
        max_abs_diff(&mats[d], &dd.indicator(d)) <= tol.matrix
    };

    let agree = drg_harmonic == drg_average && drg_average == drg_matrix;
    let mut warnings = Vec::new();
    if !agree {
        warnings.push(format!(
            "the three distance-regularity tests disagree: harmonic {drg_harmonic}, \
             average {drg_average}, matrix {drg_matrix}"
        ));
    }

    Ok(SpectralExcessSummary {
        n,
        d,
        diameter,
        degree: spectrum.distinct[0],
        average_excess,
        hm: means.hm,
        am: means.am,
        spectral_excess,
        target,
        drg_harmonic,
        drg_average,
        drg_matrix,
        agree,
        warnings,
    })
}

fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .fold(0.0f64, |m, (&x, &y)| m.max((x - y).abs()))
}

/// Which equality graphs a census keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CensusFilter {
    /// Every graph attaining the equality.
    All,
    /// Only equality graphs with `D < d` (equality with `D = d` means
    /// distance-regular, which is the classified case).
    DiameterBelowD,
}

/// One census certificate, emitted as a single JSON object per line.
/// Field order is fixed; floats are rounded to 12 significant digits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HitRecord {
    pub graph6: String,
    pub n: usize,
    #[serde(rename = "D")]
    pub diameter: usize,
    pub d: usize,
    pub kind: SpectrumKind,
    pub target: f64,
    pub hm: f64,
    pub am: f64,
    pub equality: bool,
    pub direct_residual: f64,
    pub drg: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusSummary {
    pub scanned: usize,
    pub hits: usize,
    pub skipped: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusOutcome {
    pub hits: Vec<HitRecord>,
    pub summary: CensusSummary,
}

enum LineOutcome {
    Blank,
    Hit(Box<HitRecord>),
    Miss,
    Skip(String),
}

/// Scan a stream of graph6 lines for graphs attaining the gate equality.
///
/// Disconnected graphs are skipped (and counted); the adjacency path also
/// skips irregular graphs. Per-graph analysis errors are counted and
/// skipped; I/O errors abort with the offending line number. Output order
/// matches input order for any worker count. `workers = 0` uses the rayon
/// default; `workers = 1` stays on the calling thread.
pub fn census_scan<I>(
    lines: I,
    kind: SpectrumKind,
    filter: CensusFilter,
    tol: &Tolerances,
    workers: usize,
) -> Result<CensusOutcome>
where
    I: IntoIterator<Item = std::io::Result<String>>,
{
    let mut collected = Vec::new();
    for (idx, line) in lines.into_iter().enumerate() {
        match line {
            Ok(l) => collected.push(l),
            Err(source) => return Err(Error::Io {
                line: idx + 1,
                source,
            }),
        }
    }

    let outcomes: Vec<LineOutcome> = if workers == 1 {
        collected
            .iter()
            .map(|l| scan_line(l, kind, filter, tol))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Inconsistent(format!("worker pool: {e}")))?;
        pool.install(|| {
            collected
                .par_iter()
                .map(|l| scan_line(l, kind, filter, tol))
                .collect()
        })
    };

    let mut hits = Vec::new();
    let mut skipped: BTreeMap<String, usize> = BTreeMap::new();
    let mut scanned = 0usize;
    for outcome in outcomes {
        match outcome {
            LineOutcome::Blank => {}
            LineOutcome::Miss => scanned += 1,
            LineOutcome::Hit(h) => {
                scanned += 1;
                hits.push(*h);
            }
            LineOutcome::Skip(reason) => {
                scanned += 1;
                *skipped.entry(reason).or_insert(0) += 1;
            }
        }
    }

    let summary = CensusSummary {
        scanned,
        hits: hits.len(),
        skipped,
    };
    Ok(CensusOutcome { hits, summary })
}

fn scan_line(line: &str, kind: SpectrumKind, filter: CensusFilter, tol: &Tolerances) -> LineOutcome {
    let trimmed = line.trim();
    if trimmed.is_empty() {
        return LineOutcome::Blank;
    }
    let g = match parse_graph6(trimmed) {
        Ok(g) => g,
        Err(_) => return LineOutcome::Skip("parse error".into()),
    };
    if g.n() < 2 {
        return LineOutcome::Skip("trivial (single vertex)".into());
    }
    let dd = match bfs_distances(&g) {
        Ok(dd) => dd,
        Err(Error::NotConnected) => return LineOutcome::Skip("disconnected".into()),
        Err(e) => return LineOutcome::Skip(format!("analysis error: {e}")),
    };
    if kind == SpectrumKind::Adjacency && !g.degree_stats().is_regular {
        return LineOutcome::Skip("irregular".into());
    }

    let matrix = match kind {
        SpectrumKind::Adjacency => g.adjacency_matrix(),
        SpectrumKind::Laplacian => g.laplacian_matrix(),
    };
    let gate = eigenvalues_symmetric(&matrix)
        .and_then(|raw| group_spectrum(&raw, kind, tol.grouping))
        .and_then(|spectrum| build_ortho_system(&spectrum))
        .and_then(|sys| match kind {
            SpectrumKind::Adjacency => adjacency_gate(&g, &dd, &sys, tol),
            SpectrumKind::Laplacian => laplacian_gate(&g, &dd, &sys, tol),
        });
    let gate = match gate {
        Ok(gate) => gate,
        Err(e) => return LineOutcome::Skip(format!("analysis error: {e}")),
    };

    if !gate.equality {
        return LineOutcome::Miss;
    }
    if filter == CensusFilter::DiameterBelowD && gate.diameter >= gate.d {
        return LineOutcome::Miss;
    }
    LineOutcome::Hit(Box::new(HitRecord {
        graph6: trimmed.to_string(),
        n: g.n(),
        diameter: gate.diameter,
        d: gate.d,
        kind,
        target: round12(gate.target),
        hm: round12(gate.hm),
        am: round12(gate.am),
        equality: gate.equality,
        direct_residual: round12(gate.direct_residual),
        drg: gate.drg,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use approx::assert_abs_diff_eq;

    fn pipeline(g: &Graph, kind: SpectrumKind) -> (DistanceData, OrthoSystem) {
        let dd = bfs_distances(g).unwrap();
        let m = match kind {
            SpectrumKind::Adjacency => g.adjacency_matrix(),
            SpectrumKind::Laplacian => g.laplacian_matrix(),
        };
        let raw = eigenvalues_symmetric(&m).unwrap();
        let s = group_spectrum(&raw, kind, 1e-9).unwrap();
        (dd, build_ortho_system(&s).unwrap())
    }

    #[test]
    fn means_petersen_and_cycle() {
        let dd = bfs_distances(&corpus::petersen()).unwrap();
        let m = excess_means(&dd).unwrap();
        assert!(m.values.iter().all(|&v| v == 4));
        assert_abs_diff_eq!(m.am, 4.0);
        assert_abs_diff_eq!(m.hm, 4.0);
        assert!(m.all_equal);

        let dd = bfs_distances(&corpus::cycle(6)).unwrap();
        let m = excess_means(&dd).unwrap();
        assert!(m.values.iter().all(|&v| v == 5));
    }

    #[test]
    fn means_star_center_case() {
        // the star's center sees everything within distance 1, so its
        // co-excess is the full n
        let dd = bfs_distances(&corpus::star(3)).unwrap();
        let m = excess_means(&dd).unwrap();
        assert_eq!(m.values, vec![4, 2, 2, 2]);
        assert_abs_diff_eq!(m.am, 2.5);
        assert_abs_diff_eq!(m.hm, 16.0 / 7.0, epsilon = 1e-12);
        assert_eq!(m.below_diameter, 1);
        assert!(!m.all_equal);
    }

    #[test]
    fn petersen_adjacency_gate() {
        let g = corpus::petersen();
        let (dd, sys) = pipeline(&g, SpectrumKind::Adjacency);
        let gate = adjacency_gate(&g, &dd, &sys, &Tolerances::default()).unwrap();
        assert_abs_diff_eq!(gate.target, 4.0, epsilon = 1e-9);
        assert_abs_diff_eq!(gate.hm, 4.0);
        assert!(gate.equality);
        assert!(gate.direct_check);
        assert!(gate.drg);
        assert_eq!((gate.d, gate.diameter), (2, 2));
        assert!(gate.warnings.is_empty());
    }

    #[test]
    fn weichsel_diameter_two_equality() {
        // any connected regular graph of diameter 2 attains equality, DRG or
        // not: here the circulant C_8(1,2), which has d = 4 > D = 2
        let g = corpus::circulant(8, &[1, 2]);
        let (dd, sys) = pipeline(&g, SpectrumKind::Adjacency);
        let gate = adjacency_gate(&g, &dd, &sys, &Tolerances::default()).unwrap();
        assert_eq!(gate.diameter, 2);
        assert!(gate.d > 2);
        assert!(gate.equality);
        assert!(gate.direct_check);
        assert!(!gate.drg);
    }

    #[test]
    fn irregular_refused_on_adjacency_path() {
        let g = corpus::star(3);
        let (dd, sys) = pipeline(&g, SpectrumKind::Adjacency);
        match adjacency_gate(&g, &dd, &sys, &Tolerances::default()) {
            Err(Error::IrregularAdjacency { min: 1, max: 3 }) => {}
            other => panic!("expected irregular refusal, got {other:?}"),
        }
    }

    #[test]
    fn laplacian_gate_star_strict() {
        let g = corpus::star(3);
        let (dd, sys) = pipeline(&g, SpectrumKind::Laplacian);
        let gate = laplacian_gate(&g, &dd, &sys, &Tolerances::default()).unwrap();
        // s_1(0) = 1 + r_1(0) = 2 while HM = 16/7: strict inequality
        assert_abs_diff_eq!(gate.target, 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(gate.hm, 16.0 / 7.0, epsilon = 1e-12);
        assert!(!gate.equality);
        assert!(!gate.direct_check);
        assert!(!gate.drg);
        assert!(!gate.regular_implied);
        assert!(gate.hm_gap > 1e-3);
    }

    #[test]
    fn laplacian_gate_petersen() {
        let g = corpus::petersen();
        let (dd, sys) = pipeline(&g, SpectrumKind::Laplacian);
        let gate = laplacian_gate(&g, &dd, &sys, &Tolerances::default()).unwrap();
        assert_abs_diff_eq!(gate.target, 4.0, epsilon = 1e-9);
        assert!(gate.equality && gate.direct_check && gate.drg);
        assert!(gate.regular_implied);
    }

    #[test]
    fn complete_graph_boundary_case() {
        // K_n has D = d = 1, exercising the target index D - 1 = 0
        for n in [2, 4, 6] {
            let g = corpus::complete(n);
            let (dd, sys) = pipeline(&g, SpectrumKind::Laplacian);
            let gate = laplacian_gate(&g, &dd, &sys, &Tolerances::default()).unwrap();
            assert_abs_diff_eq!(gate.target, 1.0, epsilon = 1e-10);
            assert!(gate.equality && gate.drg);

            let (dd, sys) = pipeline(&g, SpectrumKind::Adjacency);
            let gate = adjacency_gate(&g, &dd, &sys, &Tolerances::default()).unwrap();
            assert!(gate.equality && gate.direct_check && gate.drg);
        }
    }

    #[test]
    fn summary_hypercube_and_cycle() {
        let s = spectral_excess_summary(&corpus::hypercube(3), &Tolerances::default()).unwrap();
        assert_abs_diff_eq!(s.spectral_excess, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(s.hm, 7.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.am, 7.0);
        assert_abs_diff_eq!(s.target, 7.0, epsilon = 1e-9);
        assert!(s.drg_harmonic && s.drg_average && s.drg_matrix && s.agree);

        let s = spectral_excess_summary(&corpus::cycle(5), &Tolerances::default()).unwrap();
        assert_abs_diff_eq!(s.spectral_excess, 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(s.target, 3.0, epsilon = 1e-9);
        assert!(s.drg_harmonic && s.drg_average && s.drg_matrix);
    }

    #[test]
    fn summary_refuses_irregular() {
        assert!(matches!(
            spectral_excess_summary(&corpus::star(5), &Tolerances::default()),
            Err(Error::IrregularAdjacency { .. })
        ));
    }

    #[test]
    fn census_counts_and_order() {
        let petersen = crate::graph::encode_graph6(&corpus::petersen());
        let k4 = crate::graph::encode_graph6(&corpus::complete(4));
        let star = crate::graph::encode_graph6(&corpus::star(3));
        let two_triangles = crate::graph::encode_graph6(
            &corpus::cycle(3).disjoint_union(&corpus::cycle(3)),
        );
        let input = [
            k4.clone(),
            star.clone(),
            two_triangles,
            String::new(),
            petersen.clone(),
        ];
        let out = census_scan(
            input.iter().map(|l| Ok(l.clone())),
            SpectrumKind::Adjacency,
            CensusFilter::All,
            &Tolerances::default(),
            1,
        )
        .unwrap();
        assert_eq!(out.summary.scanned, 4);
        assert_eq!(out.summary.skipped.get("irregular"), Some(&1));
        assert_eq!(out.summary.skipped.get("disconnected"), Some(&1));
        assert_eq!(out.hits.len(), 2);
        assert_eq!(out.hits[0].graph6, k4);
        assert_eq!(out.hits[1].graph6, petersen);
        assert!(out.hits[1].drg);
    }

    #[test]
    fn census_filter_diameter_below_d() {
        let weichsel = crate::graph::encode_graph6(&corpus::circulant(8, &[1, 2]));
        let petersen = crate::graph::encode_graph6(&corpus::petersen());
        let input = [weichsel.clone(), petersen];
        let out = census_scan(
            input.iter().map(|l| Ok(l.clone())),
            SpectrumKind::Adjacency,
            CensusFilter::DiameterBelowD,
            &Tolerances::default(),
            1,
        )
        .unwrap();
        // Petersen has D = d, so only the circulant passes the filter
        assert_eq!(out.hits.len(), 1);
        assert_eq!(out.hits[0].graph6, weichsel);
        assert!(!out.hits[0].drg);
    }

    #[test]
    fn census_parallel_matches_serial() {
        let lines: Vec<String> = corpus::corpus()
            .iter()
            .map(|e| crate::graph::encode_graph6(&e.graph))
            .collect();
        let run = |workers| {
            census_scan(
                lines.iter().map(|l| Ok(l.clone())),
                SpectrumKind::Laplacian,
                CensusFilter::All,
                &Tolerances::default(),
                workers,
            )
            .unwrap()
        };
        let serial = run(1);
        let parallel = run(8);
        assert_eq!(serial, parallel);
    }
}
