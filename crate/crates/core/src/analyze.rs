//! Whole-graph analysis pipeline: distances, spectra, polynomial systems,
//! and gate verdicts for one or both matrix kinds.

use crate::characterize::{
    adjacency_gate, excess_means, laplacian_gate, GateReport, MeanReport,
};
use crate::config::Tolerances;
use crate::distance::{bfs_distances, DistanceData};
use crate::error::{Error, Result};
use crate::graph::{DegreeStats, Graph};
use crate::orthopoly::{
    build_ortho_system, hoffman_check, r1_regularity_check, terminal_poly_check, CheckOutcome,
    OrthoSystem,
};
use crate::spectral::{
    eigenvalues_symmetric, group_spectrum, pd_closed_form, rd_closed_form, spectral_products,
    SpectralProducts, SpectrumData, SpectrumKind,
};

/// Which matrix kinds to analyze.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindSelect {
    Adjacency,
    Laplacian,
    Both,
}

impl KindSelect {
    fn wants(self, kind: SpectrumKind) -> bool {
        matches!(
            (self, kind),
            (KindSelect::Both, _)
                | (KindSelect::Adjacency, SpectrumKind::Adjacency)
                | (KindSelect::Laplacian, SpectrumKind::Laplacian)
        )
    }
}

/// Everything computed for one matrix kind.
pub struct KindAnalysis {
    pub spectrum: SpectrumData,
    pub products: SpectralProducts,
    pub system: OrthoSystem,
    /// `p_d(λ_0)` (adjacency) or `r_d(0)` (Laplacian) from the spectrum-only
    /// formula.
    pub closed_form: f64,
    pub hoffman: CheckOutcome,
    /// Laplacian kind only: the `r_1(L) = A` regularity test.
    pub r1_regularity: Option<CheckOutcome>,
    pub terminal_residual: f64,
    /// `None` when the gate was refused (adjacency path on an irregular
    /// graph); the refusal message then sits in `gate_refusal`.
    pub gate: Option<GateReport>,
    pub gate_refusal: Option<String>,
}

/// Full analysis of one connected graph.
pub struct GraphAnalysis {
    pub stats: DegreeStats,
    pub distances: DistanceData,
    pub means: MeanReport,
    pub adjacency: Option<KindAnalysis>,
    pub laplacian: Option<KindAnalysis>,
}

/// Run the full pipeline. Fails on disconnected input, on single-vertex
/// input, and on irregular input when `select` is adjacency-only (the
/// Laplacian path is the right tool there).
pub fn analyze_graph(g: &Graph, select: KindSelect, tol: &Tolerances) -> Result<GraphAnalysis> {
    if g.n() < 2 {
        return Err(Error::TooSmall);
    }
    let stats = g.degree_stats();
    if select == KindSelect::Adjacency && !stats.is_regular {
        return Err(Error::IrregularAdjacency {
            min: stats.min(),
            max: stats.max(),
        });
    }
    let distances = bfs_distances(g)?;
    let means = excess_means(&distances)?;

    let adjacency = if select.wants(SpectrumKind::Adjacency) {
        Some(analyze_kind(g, &distances, SpectrumKind::Adjacency, tol)?)
    } else {
        None
    };
    let laplacian = if select.wants(SpectrumKind::Laplacian) {
        Some(analyze_kind(g, &distances, SpectrumKind::Laplacian, tol)?)
    } else {
        None
    };

    Ok(GraphAnalysis {
        stats,
        distances,
        means,
        adjacency,
        laplacian,
    })
}

fn analyze_kind(
    g: &Graph,
    dd: &DistanceData,
    kind: SpectrumKind,
    tol: &Tolerances,
) -> Result<KindAnalysis> {
    let matrix = match kind {
        SpectrumKind::Adjacency => g.adjacency_matrix(),
        SpectrumKind::Laplacian => g.laplacian_matrix(),
    };
    let raw = eigenvalues_symmetric(&matrix)?;
    let spectrum = group_spectrum(&raw, kind, tol.grouping)?;
    let products = spectral_products(&spectrum)?;
    let system = build_ortho_system(&spectrum)?;
    let closed_form = match kind {
        SpectrumKind::Adjacency => pd_closed_form(&spectrum)?,
        SpectrumKind::Laplacian => rd_closed_form(&spectrum)?,
    };
    let hoffman = hoffman_check(g, &system)?;
    let r1_regularity = match kind {
        SpectrumKind::Laplacian if system.d() >= 1 => Some(r1_regularity_check(g, &system)?),
        _ => None,
    };
    let terminal_residual = terminal_poly_check(&system, &matrix);

    let (gate, gate_refusal) = match kind {
        SpectrumKind::Adjacency => match adjacency_gate(g, dd, &system, tol) {
            Ok(gate) => (Some(gate), None),
            Err(e @ Error::IrregularAdjacency { .. }) => (None, Some(e.to_string())),
            Err(e) => return Err(e),
        },
        SpectrumKind::Laplacian => (Some(laplacian_gate(g, dd, &system, tol)?), None),
    };

    Ok(KindAnalysis {
        spectrum,
        products,
        system,
        closed_form,
        hoffman,
        r1_regularity,
        terminal_residual,
        gate,
        gate_refusal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use approx::assert_abs_diff_eq;

    #[test]
    fn both_kinds_on_petersen() {
        let g = corpus::petersen();
        let a = analyze_graph(&g, KindSelect::Both, &Tolerances::default()).unwrap();
        let adj = a.adjacency.unwrap();
        let lap = a.laplacian.unwrap();
        assert_abs_diff_eq!(adj.closed_form, 6.0, epsilon = 1e-9);
        assert_abs_diff_eq!(lap.closed_form, 6.0, epsilon = 1e-9);
        assert!(adj.gate.unwrap().drg);
        assert!(lap.gate.unwrap().drg);
        assert!(adj.hoffman.holds);
        assert!(lap.r1_regularity.unwrap().holds);
    }

    #[test]
    fn adjacency_only_rejects_irregular() {
        let g = corpus::star(3);
        assert!(matches!(
            analyze_graph(&g, KindSelect::Adjacency, &Tolerances::default()),
            Err(Error::IrregularAdjacency { .. })
        ));
        // with Both, the adjacency gate is refused but everything else runs
        let a = analyze_graph(&g, KindSelect::Both, &Tolerances::default()).unwrap();
        let adj = a.adjacency.unwrap();
        assert!(adj.gate.is_none());
        assert!(adj.gate_refusal.unwrap().contains("Laplacian"));
        assert!(a.laplacian.unwrap().gate.is_some());
    }

    #[test]
    fn single_vertex_too_small() {
        let g = crate::graph::parse_graph6("@").unwrap();
        assert!(matches!(
            analyze_graph(&g, KindSelect::Both, &Tolerances::default()),
            Err(Error::TooSmall)
        ));
    }

    #[test]
    fn disconnected_reported() {
        let t = corpus::cycle(3);
        let g = t.disjoint_union(&t);
        assert!(matches!(
            analyze_graph(&g, KindSelect::Both, &Tolerances::default()),
            Err(Error::NotConnected)
        ));
    }
}
