use serde::{Deserialize, Serialize};

/// Numerical tolerances used across the pipeline.
///
/// Every report echoes the tolerances it was produced with so that runs are
/// reproducible. The detector thresholds that are not meant to be tuned
/// (Hoffman, degree-one regularity, terminal residual) are fixed constants
/// below.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative tolerance for merging near-equal eigenvalues into one
    /// distinct eigenvalue. Scaled by `max(1, spectral radius)`.
    pub grouping: f64,
    /// Relative tolerance for the scalar equality `HM = target`.
    pub equality: f64,
    /// Absolute entrywise tolerance for matrix identities such as
    /// `A_D = sum of the high-degree predistance matrices`.
    pub matrix: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            grouping: 1e-9,
            equality: 1e-6,
            matrix: 1e-6,
        }
    }
}

impl Tolerances {
    pub fn with_grouping(mut self, tol: f64) -> Self {
        self.grouping = tol;
        self
    }

    pub fn with_equality(mut self, tol: f64) -> Self {
        self.equality = tol;
        self
    }
}

/// Max-entry threshold for `q_d(A) = J` and `s_d(L) = J`.
pub const HOFFMAN_TOL: f64 = 1e-7;

/// Max-entry threshold for `r_1(L) = A`.
pub const R1_REGULARITY_TOL: f64 = 1e-7;

/// The terminal polynomial residual is accepted when it stays below
/// `TERMINAL_TOL * radius^(d+1)`.
pub const TERMINAL_TOL: f64 = 1e-6;

/// Input matrices must be symmetric within this absolute deviation.
pub const SYMMETRY_TOL: f64 = 1e-12;
