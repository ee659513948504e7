//! The analysis report: a serializable snapshot of everything the pipeline
//! computed, with floats rounded to 12 significant digits so that emitted
//! JSON is byte-stable and parses back to the exact report.

use predist::analyze::{GraphAnalysis, KindAnalysis};
use predist::numfmt::round12;
use predist::spectral::SpectrumKind;
use predist::Tolerances;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub graph: GraphSummary,
    pub diameter: usize,
    pub means: MeansDto,
    pub tolerances: Tolerances,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjacency: Option<KindDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub laplacian: Option<KindDto>,
    pub verdicts: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub regular: bool,
    pub mean_degree: f64,
    pub mean_square_degree: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeansDto {
    pub values: Vec<usize>,
    pub am: f64,
    pub hm: f64,
    pub all_equal: bool,
    pub below_diameter: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KindDto {
    pub kind: SpectrumKind,
    pub d: usize,
    pub distinct: Vec<f64>,
    pub multiplicities: Vec<usize>,
    pub spectrum_warnings: Vec<String>,
    pub system_warnings: Vec<String>,
    pub phi: Vec<f64>,
    /// One row per polynomial: coefficients (ascending) and the values of
    /// `p_i` and of the running sum `q_i` at the normalization point.
    pub polynomials: Vec<PolyRow>,
    /// `p_d(λ_0)` or `r_d(0)` from the spectrum-only formula.
    pub closed_form_excess: f64,
    pub hoffman_holds: bool,
    pub hoffman_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r1_regularity_holds: Option<bool>,
    pub terminal_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gate: Option<GateDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gate_refusal: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyRow {
    pub i: usize,
    pub coeffs: Vec<f64>,
    pub value: f64,
    pub sum_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateDto {
    pub kind: SpectrumKind,
    pub d: usize,
    #[serde(rename = "D")]
    pub diameter: usize,
    pub target: f64,
    pub hm: f64,
    pub am: f64,
    pub hm_gap: f64,
    pub equality: bool,
    pub direct_check: bool,
    pub direct_residual: f64,
    pub drg: bool,
    pub regular_implied: bool,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn build(n: usize, edges: usize, analysis: &GraphAnalysis, tol: &Tolerances) -> Report {
        let stats = &analysis.stats;
        let mut verdicts = Vec::new();
        let adjacency = analysis.adjacency.as_ref().map(kind_dto);
        let laplacian = analysis.laplacian.as_ref().map(kind_dto);

        for dto in [&adjacency, &laplacian].into_iter().flatten() {
            match (&dto.gate, &dto.gate_refusal) {
                (Some(gate), _) => {
                    verdicts.push(format!(
                        "{} path: distance matrix A_D {} the span of the predistance matrices \
                         (HM {} target {}); distance-regular: {}",
                        dto.kind,
                        if gate.equality { "lies in" } else { "is outside" },
                        if gate.equality { "equals" } else { "exceeds" },
                        gate.target,
                        gate.drg
                    ));
                }
                (None, Some(reason)) => {
                    verdicts.push(format!("{} path: gate refused ({reason})", dto.kind));
                }
                (None, None) => {}
            }
        }

        Report {
            graph: GraphSummary {
                n,
                edges,
                regular: stats.is_regular,
                mean_degree: round12(stats.mean_degree),
                mean_square_degree: round12(stats.mean_square_degree),
            },
            diameter: analysis.distances.diameter(),
            means: MeansDto {
                values: analysis.means.values.clone(),
                am: round12(analysis.means.am),
                hm: round12(analysis.means.hm),
                all_equal: analysis.means.all_equal,
                below_diameter: analysis.means.below_diameter,
            },
            tolerances: *tol,
            adjacency,
            laplacian,
            verdicts,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        out.push_str(&format!(
            "graph: n = {}, edges = {}, regular = {}, mean degree = {}, mean square degree = {}\n",
            g.n, g.edges, g.regular, g.mean_degree, g.mean_square_degree
        ));
        out.push_str(&format!("diameter D = {}\n", self.diameter));
        out.push_str(&format!(
            "co-excess means over n - |Γ_D(x)|: AM = {}, HM = {}, all equal = {}\n",
            self.means.am, self.means.hm, self.means.all_equal
        ));
        if self.means.below_diameter > 0 {
            out.push_str(&format!(
                "  note: {} vertices have eccentricity below the diameter\n",
                self.means.below_diameter
            ));
        }
        for dto in [&self.adjacency, &self.laplacian].into_iter().flatten() {
            out.push_str(&format!("\n== {} spectrum ==\n", dto.kind));
            out.push_str(&format!(
                "distinct ({}): {:?}\nmultiplicities: {:?}\n",
                dto.d + 1,
                dto.distinct,
                dto.multiplicities
            ));
            for w in dto.spectrum_warnings.iter().chain(&dto.system_warnings) {
                out.push_str(&format!("  warning: {w}\n"));
            }
            let (p, q) = match dto.kind {
                SpectrumKind::Adjacency => ("p", "q"),
                SpectrumKind::Laplacian => ("r", "s"),
            };
            for row in &dto.polynomials {
                out.push_str(&format!(
                    "{p}_{i}: coeffs {:?}, {p}_{i}(x*) = {}, {q}_{i}(x*) = {}\n",
                    row.coeffs,
                    row.value,
                    row.sum_value,
                    i = row.i,
                ));
            }
            out.push_str(&format!(
                "closed-form excess = {}\nhoffman: holds = {} (residual {:.3e})\n",
                dto.closed_form_excess, dto.hoffman_holds, dto.hoffman_residual
            ));
            if let Some(r1) = dto.r1_regularity_holds {
                out.push_str(&format!("r_1(L) = A: {r1}\n"));
            }
            out.push_str(&format!(
                "terminal residual = {:.3e}\n",
                dto.terminal_residual
            ));
            match (&dto.gate, &dto.gate_refusal) {
                (Some(gate), _) => {
                    out.push_str(&format!(
                        "gate: target = {}, HM = {}, AM = {}, gap = {:.3e}\n\
                         equality = {}, direct check = {} (residual {:.3e}), drg = {}\n",
                        gate.target,
                        gate.hm,
                        gate.am,
                        gate.hm_gap,
                        gate.equality,
                        gate.direct_check,
                        gate.direct_residual,
                        gate.drg
                    ));
                    if gate.regular_implied {
                        out.push_str("equality at D = 2 on the Laplacian path implies regularity\n");
                    }
                    for w in &gate.warnings {
                        out.push_str(&format!("  warning: {w}\n"));
                    }
                }
                (None, Some(reason)) => out.push_str(&format!("gate refused: {reason}\n")),
                (None, None) => {}
            }
        }
        out.push('\n');
        for v in &self.verdicts {
            out.push_str(&format!("verdict: {v}\n"));
        }
        out
    }
}

fn kind_dto(k: &KindAnalysis) -> KindDto {
    let sys = &k.system;
    let polynomials = (0..=sys.d())
        .map(|i| PolyRow {
            i,
            coeffs: sys.poly(i).coeffs().iter().map(|&c| round12(c)).collect(),
            value: round12(sys.value_at_norm(i)),
            sum_value: round12(sys.sum_value_at_norm(i)),
        })
        .collect();
    KindDto {
        kind: k.spectrum.kind,
        d: k.spectrum.d(),
        distinct: k.spectrum.distinct.iter().map(|&v| round12(v)).collect(),
        multiplicities: k.spectrum.multiplicities.clone(),
        spectrum_warnings: k.spectrum.warnings.clone(),
        system_warnings: k.system.warnings().to_vec(),
        phi: k.products.phi.iter().map(|&v| round12(v)).collect(),
        polynomials,
        closed_form_excess: round12(k.closed_form),
        hoffman_holds: k.hoffman.holds,
        hoffman_residual: round12(k.hoffman.residual),
        r1_regularity_holds: k.r1_regularity.map(|c| c.holds),
        terminal_residual: round12(k.terminal_residual),
        gate: k.gate.as_ref().map(|g| GateDto {
            kind: g.kind,
            d: g.d,
            diameter: g.diameter,
            target: round12(g.target),
            hm: round12(g.hm),
            am: round12(g.am),
            hm_gap: round12(g.hm_gap),
            equality: g.equality,
            direct_check: g.direct_check,
            direct_residual: round12(g.direct_residual),
            drg: g.drg,
            regular_implied: g.regular_implied,
            warnings: g.warnings.clone(),
        }),
        gate_refusal: k.gate_refusal.clone(),
    }
}
