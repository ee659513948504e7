//! Symmetric eigendecomposition, grouping of numerically-close eigenvalues
//! into distinct eigenvalues with multiplicities, and the closed-form
//! spectral quantities used by the characterization gates.

use crate::config::SYMMETRY_TOL;
use crate::error::{Error, Result};
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Which matrix a spectrum (and everything derived from it) belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
}

impl std::fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectrumKind::Adjacency => write!(f, "adjacency"),
            SpectrumKind::Laplacian => write!(f, "laplacian"),
        }
    }
}

/// Distinct eigenvalues with multiplicities.
///
/// Adjacency spectra are stored in decreasing order (`λ_0 > … > λ_d`),
/// Laplacian spectra in increasing order (`θ_0 = 0 < … < θ_d`). The
/// normalization point is `λ_0` for the adjacency kind and `0` for the
/// Laplacian kind.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumData {
    pub kind: SpectrumKind,
    pub distinct: Vec<f64>,
    pub multiplicities: Vec<usize>,
    /// Total number of eigenvalues, `Σ m_i`.
    pub n: usize,
    pub normalization_point: f64,
    /// Grouping diagnostics (ambiguous gaps near the merge tolerance).
    pub warnings: Vec<String>,
}

impl SpectrumData {
    /// Index of the last distinct eigenvalue: the spectrum has `d + 1`
    /// distinct values.
    pub fn d(&self) -> usize {
        self.distinct.len() - 1
    }

    /// Largest absolute eigenvalue.
    pub fn radius(&self) -> f64 {
        self.distinct.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }

    /// Multiplicity of the eigenvalue at the normalization point (the first
    /// distinct eigenvalue for both kinds, by the ordering conventions).
    pub fn norm_point_multiplicity(&self) -> usize {
        self.multiplicities[0]
    }

    /// Discrete measure of the spectrum: `(node, weight)` pairs with weights
    /// `m_i / n`.
    pub fn measure(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let n = self.n as f64;
        self.distinct
            .iter()
            .zip(&self.multiplicities)
            .map(move |(&v, &m)| (v, m as f64 / n))
    }
}

/// Eigenvalues of a symmetric matrix, sorted in descending order.
pub fn eigenvalues_symmetric(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::Inconsistent(format!(
            "matrix is {}x{}, not square",
            n,
            m.ncols()
        )));
    }
    for i in 0..n {
        for j in 0..n {
            let v = m[(i, j)];
            if !v.is_finite() {
                return Err(Error::NonFinite { row: i, col: j });
            }
        }
    }
    let mut deviation = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            deviation = deviation.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    if deviation > SYMMETRY_TOL {
        return Err(Error::NotSymmetric { deviation });
    }

    let mut vals: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    Ok(vals)
}

/// Merge numerically-close eigenvalues into distinct eigenvalues with
/// multiplicities.
///
/// `raw` must be sorted (either direction); consecutive values within
/// `tol * max(1, radius)` join one group whose value is the group mean. For
/// the Laplacian kind the group nearest 0 snaps to exactly 0 and must be
/// simple, otherwise the graph is disconnected. Gaps between half and twice
/// the merge threshold are ambiguous: they are reported as warnings together
/// with the `d` each alternative grouping would produce.
pub fn group_spectrum(raw: &[f64], kind: SpectrumKind, tol: f64) -> Result<SpectrumData> {
    if raw.is_empty() {
        return Err(Error::Inconsistent("empty spectrum".into()));
    }
    if tol <= 0.0 {
        return Err(Error::Inconsistent(format!(
            "grouping tolerance must be positive, got {tol}"
        )));
    }
    let descending: Vec<f64> = {
        let mut v = raw.to_vec();
        if v.windows(2).all(|w| w[0] <= w[1]) {
            v.reverse();
        } else if !v.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Inconsistent("raw eigenvalues not sorted".into()));
        }
        v
    };

    let radius = descending.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let threshold = tol * radius.max(1.0);

    let (mut distinct, mut multiplicities) = group_with_threshold(&descending, threshold);

    let mut warnings = Vec::new();
    for w in descending.windows(2) {
        let gap = w[0] - w[1];
        if gap >= 0.5 * threshold && gap <= 2.0 * threshold {
            let d_fine = group_with_threshold(&descending, 0.5 * threshold).0.len() - 1;
            let d_coarse = group_with_threshold(&descending, 2.0 * threshold).0.len() - 1;
            warnings.push(format!(
                "ambiguous eigenvalue gap {gap:.3e} near merge threshold {threshold:.3e} \
                 (between {} and {}); d = {d_fine} at half the tolerance, d = {d_coarse} at twice",
                w[0], w[1]
            ));
            break;
        }
    }

    let n: usize = multiplicities.iter().sum();
    let normalization_point = match kind {
        SpectrumKind::Adjacency => distinct[0],
        SpectrumKind::Laplacian => {
            distinct.reverse();
            multiplicities.reverse();
            // connected graphs have a simple Laplacian eigenvalue at 0
            if multiplicities[0] > 1 {
                return Err(Error::DisconnectedSpectrum {
                    multiplicity: multiplicities[0],
                });
            }
            if distinct[0].abs() > 1e-6 * radius.max(1.0) {
                return Err(Error::Inconsistent(format!(
                    "Laplacian spectrum has no eigenvalue near 0 (smallest is {})",
                    distinct[0]
                )));
            }
            distinct[0] = 0.0;
            0.0
        }
    };

    Ok(SpectrumData {
        kind,
        distinct,
        multiplicities,
        n,
        normalization_point,
        warnings,
    })
}

fn group_with_threshold(descending: &[f64], threshold: f64) -> (Vec<f64>, Vec<usize>) {
    let mut distinct = Vec::new();
    let mut multiplicities = Vec::new();
    let mut start = 0;
    for i in 1..=descending.len() {
        if i == descending.len() || descending[i - 1] - descending[i] > threshold {
            let group = &descending[start..i];
            distinct.push(group.iter().sum::<f64>() / group.len() as f64);
            multiplicities.push(group.len());
            start = i;
        }
    }
    (distinct, multiplicities)
}

/// The products `φ_i = Π_{j≠i} (μ_i − μ_j)` over the distinct eigenvalues
/// (written `ψ_i` for the Laplacian kind).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralProducts {
    pub phi: Vec<f64>,
}

pub fn spectral_products(s: &SpectrumData) -> Result<SpectralProducts> {
    let vals = &s.distinct;
    let mut phi = Vec::with_capacity(vals.len());
    for (i, &vi) in vals.iter().enumerate() {
        let mut factors: Vec<f64> = vals
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &vj)| vi - vj)
            .collect();
        if factors.contains(&0.0) {
            return Err(Error::Inconsistent(format!(
                "repeated distinct eigenvalue {vi} after grouping"
            )));
        }
        // multiply large magnitudes first
        factors.sort_by(|a, b| b.abs().partial_cmp(&a.abs()).expect("finite factors"));
        phi.push(factors.iter().product());
    }
    Ok(SpectralProducts { phi })
}

/// Spectrum-only value of the highest-degree predistance polynomial at the
/// top adjacency eigenvalue: `n (Σ_i φ_0² / (m_i φ_i²))^{-1}`.
pub fn pd_closed_form(s: &SpectrumData) -> Result<f64> {
    if s.kind != SpectrumKind::Adjacency {
        return Err(Error::Inconsistent(
            "pd_closed_form requires an adjacency spectrum".into(),
        ));
    }
    closed_form(s)
}

/// Laplacian analogue: `n (Σ_i ψ_0² / (m_i ψ_i²))^{-1}` gives `r_d(0)`.
pub fn rd_closed_form(s: &SpectrumData) -> Result<f64> {
    if s.kind != SpectrumKind::Laplacian {
        return Err(Error::Inconsistent(
            "rd_closed_form requires a Laplacian spectrum".into(),
        ));
    }
    closed_form(s)
}

fn closed_form(s: &SpectrumData) -> Result<f64> {
    let products = spectral_products(s)?;
    let phi0 = products.phi[0];
    let sum: f64 = products
        .phi
        .iter()
        .zip(&s.multiplicities)
        .map(|(&phi_i, &m_i)| {
            let ratio = phi0 / phi_i;
            ratio * ratio / m_i as f64
        })
        .sum();
    Ok(s.n as f64 / sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use nalgebra::DMatrix;

    fn spectrum(kind: SpectrumKind, distinct: &[f64], mult: &[usize]) -> SpectrumData {
        let n = mult.iter().sum();
        SpectrumData {
            kind,
            distinct: distinct.to_vec(),
            multiplicities: mult.to_vec(),
            n,
            normalization_point: match kind {
                SpectrumKind::Adjacency => distinct[0],
                SpectrumKind::Laplacian => 0.0,
            },
            warnings: Vec::new(),
        }
    }

    #[test]
    fn k2_adjacency_eigenvalues() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let vals = eigenvalues_symmetric(&a).unwrap();
        assert_abs_diff_eq!(vals[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vals[1], -1.0, epsilon = 1e-12);
    }

    #[test]
    fn rejects_asymmetric_and_nonfinite() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.5, 0.0]);
        assert!(matches!(
            eigenvalues_symmetric(&m),
            Err(Error::NotSymmetric { .. })
        ));
        let m = DMatrix::from_row_slice(2, 2, &[0.0, f64::NAN, f64::NAN, 0.0]);
        assert!(matches!(
            eigenvalues_symmetric(&m),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn grouping_petersen_profile() {
        let raw = [
            3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0,
        ];
        let s = group_spectrum(&raw, SpectrumKind::Adjacency, 1e-9).unwrap();
        assert_eq!(s.distinct, vec![3.0, 1.0, -2.0]);
        assert_eq!(s.multiplicities, vec![1, 5, 4]);
        assert_eq!(s.n, 10);
        assert_eq!(s.d(), 2);
        assert_eq!(s.normalization_point, 3.0);
    }

    #[test]
    fn grouping_merges_below_tolerance() {
        let raw = [2.0, 2.0 - 1e-12];
        let s = group_spectrum(&raw, SpectrumKind::Adjacency, 1e-9).unwrap();
        assert_eq!(s.multiplicities, vec![2]);
        assert_eq!(s.d(), 0);
    }

    #[test]
    fn laplacian_snaps_zero() {
        let raw = [3.0, 1.0, 1e-14];
        let s = group_spectrum(&raw, SpectrumKind::Laplacian, 1e-9).unwrap();
        assert_eq!(s.distinct[0], 0.0);
        assert!(s.distinct.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(s.normalization_point, 0.0);
    }

    #[test]
    fn laplacian_disconnected_detected() {
        let raw = [2.0, 2.0, 1e-13, -1e-14];
        assert!(matches!(
            group_spectrum(&raw, SpectrumKind::Laplacian, 1e-9),
            Err(Error::DisconnectedSpectrum { multiplicity: 2 })
        ));
    }

    #[test]
    fn ambiguous_gap_warns() {
        let raw = [1.0 + 1.5e-9, 1.0, 0.0];
        let s = group_spectrum(&raw, SpectrumKind::Adjacency, 1e-9).unwrap();
        assert_eq!(s.warnings.len(), 1);
        assert!(s.warnings[0].contains("ambiguous"));
    }

    #[test]
    fn products_by_hand() {
        let s = spectrum(SpectrumKind::Adjacency, &[3.0, 1.0, -2.0], &[1, 5, 4]);
        let p = spectral_products(&s).unwrap();
        assert_eq!(p.phi, vec![10.0, -6.0, 15.0]);

        let s = spectrum(SpectrumKind::Adjacency, &[1.0, -1.0], &[1, 1]);
        assert_eq!(spectral_products(&s).unwrap().phi, vec![2.0, -2.0]);
    }

    #[test]
    fn products_sign_alternates() {
        let s = spectrum(
            SpectrumKind::Adjacency,
            &[4.0, 2.0, 0.5, -1.0, -3.0],
            &[1, 2, 3, 2, 1],
        );
        let p = spectral_products(&s).unwrap();
        for (i, &phi) in p.phi.iter().enumerate() {
            assert!(phi.signum() == if i % 2 == 0 { 1.0 } else { -1.0 });
        }
    }

    #[test]
    fn petersen_closed_form() {
        let s = spectrum(SpectrumKind::Adjacency, &[3.0, 1.0, -2.0], &[1, 5, 4]);
        assert_abs_diff_eq!(pd_closed_form(&s).unwrap(), 6.0, epsilon = 1e-12);
    }

    #[test]
    fn complete_graph_closed_form() {
        for n in 2..7usize {
            let s = spectrum(
                SpectrumKind::Adjacency,
                &[(n - 1) as f64, -1.0],
                &[1, n - 1],
            );
            assert_abs_diff_eq!(pd_closed_form(&s).unwrap(), (n - 1) as f64, epsilon = 1e-12);
        }
    }

    #[test]
    fn laplacian_closed_forms() {
        let petersen = spectrum(SpectrumKind::Laplacian, &[0.0, 2.0, 5.0], &[1, 5, 4]);
        assert_abs_diff_eq!(rd_closed_form(&petersen).unwrap(), 6.0, epsilon = 1e-12);

        let k2 = spectrum(SpectrumKind::Laplacian, &[0.0, 2.0], &[1, 1]);
        assert_abs_diff_eq!(rd_closed_form(&k2).unwrap(), 1.0, epsilon = 1e-12);

        // star K_{1,3}: frozen from the Gram-Schmidt oracle (r_2(0) = 2)
        let star = spectrum(SpectrumKind::Laplacian, &[0.0, 1.0, 4.0], &[1, 2, 1]);
        assert_abs_diff_eq!(rd_closed_form(&star).unwrap(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn kind_guards() {
        let s = spectrum(SpectrumKind::Adjacency, &[1.0, -1.0], &[1, 1]);
        assert!(rd_closed_form(&s).is_err());
        let s = spectrum(SpectrumKind::Laplacian, &[0.0, 2.0], &[1, 1]);
        assert!(pd_closed_form(&s).is_err());
    }
}
