//! Foundation arithmetic: exact Bernoulli numbers, compensated summation,
//! double-word scalars and adaptive quadrature.
//!
//! Everything above this module is expressed through these primitives.

pub mod bernoulli;
pub mod extended;
pub mod oscillatory;
pub mod quadrature;
pub mod summation;

use crate::error::{domain, Result};
use num_complex::Complex64;

/// The universal scalar. Derived results are checked for finiteness.
pub type ComplexValue = Complex64;

pub use bernoulli::{bernoulli, Bernoulli, BERNOULLI_CAP};
pub use extended::{ExtendedComplex, ExtendedValue};
pub use oscillatory::{integrate_oscillatory, Oscillator};
pub use quadrature::{integrate_adaptive, QuadratureResult};
pub use summation::{compensated_sum, Neumaier, NeumaierComplex, SumResult};

/// Accuracy targets plus work budgets.
///
/// A quantity `x` with error `e` is accepted when `e <= abs_tol` or
/// `e <= rel_tol * |x|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_terms: usize,
    pub max_evals: usize,
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64, max_terms: usize, max_evals: usize) -> Result<Self> {
        if !(abs_tol >= 0.0 && rel_tol >= 0.0) || !abs_tol.is_finite() || !rel_tol.is_finite() {
            return Err(domain("tolerances must be finite and non-negative"));
        }
        if abs_tol == 0.0 && rel_tol == 0.0 {
            return Err(domain("at least one of abs_tol, rel_tol must be positive"));
        }
        if max_terms == 0 || max_evals == 0 {
            return Err(domain("budgets must be positive"));
        }
        Ok(Self { abs_tol, rel_tol, max_terms, max_evals })
    }

    /// Same budgets, both targets set to `tol`.
    pub fn uniform(tol: f64) -> Self {
        Self { abs_tol: tol, rel_tol: tol, ..Self::default() }
    }

    /// Relative target only (`abs_tol = 0`), default budgets.
    pub fn relative(rel_tol: f64) -> Self {
        Self { abs_tol: 0.0, rel_tol, ..Self::default() }
    }

    pub fn with_abs(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_rel(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    /// Targets divided by `factor`, budgets unchanged.
    pub fn tightened(self, factor: f64) -> Self {
        Self { abs_tol: self.abs_tol / factor, rel_tol: self.rel_tol / factor, ..self }
    }

    /// Largest error accepted for a value of magnitude `scale`.
    pub fn allowance(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * scale)
    }

    pub fn accepts(&self, err: f64, scale: f64) -> bool {
        err <= self.allowance(scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs_tol: 1e-12, rel_tol: 1e-12, max_terms: 1_000_000, max_evals: 4_000_000 }
    }
}

pub(crate) fn is_finite(z: ComplexValue) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `e^z − 1` without cancellation for small `|z|`.
pub fn exp_m1(z: ComplexValue) -> ComplexValue {
    let (s, c) = (libm::sin(z.im), libm::cos(z.im));
    let half = libm::sin(0.5 * z.im);
    ComplexValue::new(libm::expm1(z.re) * c - 2.0 * half * half, libm::exp(z.re) * s)
}
