//! Dense real polynomials in the monomial basis.

use nalgebra::DMatrix;
use std::ops::{Add, Mul, Sub};

/// A polynomial stored by coefficients in ascending degree order.
///
/// The zero polynomial has an empty coefficient list; any other value keeps a
/// nonzero leading coefficient (exact zeros are trimmed on construction).
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![0.0, 1.0])
    }

    pub fn from_coeffs(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the convention that constants (and zero) have degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &DMatrix<f64>) -> DMatrix<f64> {
        let n = m.nrows();
        assert_eq!(n, m.ncols(), "matrix must be square");
        let mut acc = DMatrix::zeros(n, n);
        for &c in self.coeffs.iter().rev() {
            acc = m * acc;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    /// Multiply by `x` (shift coefficients up one degree).
    pub fn times_x(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(0.0);
        c.extend_from_slice(&self.coeffs);
        Poly::from_coeffs(c)
    }

    pub fn scaled(&self, s: f64) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Largest absolute coefficient.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, &c| m.max(c.abs()))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0.0; len];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0.0; len];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Poly::from_coeffs(out)
    }
}

impl Mul<f64> for &Poly {
    type Output = Poly;
    fn mul(self, s: f64) -> Poly {
        self.scaled(s)
    }
}
