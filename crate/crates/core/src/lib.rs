//! Decide, from a graph's spectrum and distance structure, whether its
//! distance-D matrix is a polynomial in the adjacency (or Laplacian) matrix,
//! and whether the graph is distance-regular.
//!
//! The pipeline: parse a graph (graph6 or edge list), compute exact BFS
//! distances, take the spectrum of the adjacency or Laplacian matrix, build
//! the orthogonal predistance polynomial system of that spectrum, and compare
//! the harmonic mean of the co-excess numbers `n - |Γ_D(x)|` against the
//! spectrum-only target `q_(D-1)(λ_0)` (adjacency, regular graphs) or
//! `s_(D-1)(0)` (Laplacian, any graph). Equality is equivalent to the
//! distance-D matrix being the tail sum of the predistance matrices, and at
//! `D = d` it characterizes distance-regularity (the spectral excess
//! theorem).

pub mod analyze;
pub mod characterize;
pub mod config;
pub mod corpus;
pub mod distance;
pub mod error;
pub mod graph;
pub mod numfmt;
pub mod orthopoly;
pub mod poly;
pub mod spectral;

pub use analyze::{analyze_graph, GraphAnalysis, KindAnalysis, KindSelect};
pub use characterize::{
    adjacency_gate, census_scan, excess_means, laplacian_gate, spectral_excess_summary,
    CensusFilter, CensusOutcome, CensusSummary, GateReport, HitRecord, MeanReport,
    SpectralExcessSummary,
};
pub use config::Tolerances;
pub use distance::{bfs_distances, DistanceData};
pub use error::{Error, Result};
pub use graph::{encode_graph6, parse_edge_list, parse_graph6, DegreeStats, Graph};
pub use orthopoly::{
    build_ortho_system, evaluate_poly_at_matrix, hoffman_check, inner_product,
    r1_regularity_check, terminal_poly_check, CheckOutcome, OrthoSystem,
};
pub use poly::Poly;
pub use spectral::{
    eigenvalues_symmetric, group_spectrum, pd_closed_form, rd_closed_form, spectral_products,
    SpectralProducts, SpectrumData, SpectrumKind,
};
