//! `∫₀^∞ g(u)·cos u du` and `∫₀^∞ g(u)·sin u du` for slowly decaying `g`.
//!
//! The half-line is cut at multiples of π. Each half-period panel is
//! integrated adaptively, so the panel values form an alternating series
//! whose tail is summed with the Euler/van Wijngaarden transformation.

use alloc::vec::Vec;

use super::quadrature::integrate_adaptive;
use super::{ComplexValue, QuadratureResult, Tolerance};
use crate::error::{Error, Result};

/// Oscillating factor multiplying `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Oscillator {
    Cos,
    Sin,
}

/// Incremental Euler transformation of an alternating series.
///
/// Terms are pushed with their signs; each push returns the current
/// accelerated estimate of the full sum. A table column is only promoted
/// while its entries keep shrinking, which lets the transform degrade
/// gracefully to direct summation on non-alternating input.
#[derive(Debug, Clone, Default)]
pub struct EulerSum {
    table: Vec<ComplexValue>,
    depth: usize,
    sum: ComplexValue,
    count: usize,
}

impl EulerSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> usize {
        self.count
    }

    pub fn value(&self) -> ComplexValue {
        self.sum
    }

    pub fn push(&mut self, term: ComplexValue) -> ComplexValue {
        self.count += 1;
        if self.count == 1 {
            self.table.clear();
            self.table.push(term);
            self.depth = 1;
            self.sum = term * 0.5;
            return self.sum;
        }
        let mut carry = self.table[0];
        self.table[0] = term;
        for j in 0..self.depth - 1 {
            let next = self.table[j + 1];
            self.table[j + 1] = (self.table[j] + carry) * 0.5;
            carry = next;
        }
        let fresh = (self.table[self.depth - 1] + carry) * 0.5;
        if self.table.len() == self.depth {
            self.table.push(fresh);
        } else {
            self.table[self.depth] = fresh;
        }
        if fresh.norm() <= self.table[self.depth - 1].norm() {
            self.depth += 1;
            self.sum += fresh * 0.5;
        } else {
            self.sum += fresh;
        }
        self.sum
    }
}

/// Consecutive settled estimates required before returning.
const SETTLED: usize = 3;
/// Panel budget ceiling regardless of `tol.max_terms`.
const MAX_PANELS: usize = 4000;

/// Integrates `g(u)·osc(u)` over `[0, ∞)`.
///
/// `err_estimate` adds the per-panel quadrature errors to the last change of
/// the accelerated estimate.
pub fn integrate_oscillatory<F>(mut g: F, osc: Oscillator, tol: &Tolerance) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> ComplexValue,
{
    use core::f64::consts::PI;
    let panel_tol = tol.tightened(100.0);
    let mut euler = EulerSum::new();
    let mut quad_err = 0.0;
    let mut n_evals = 0;
    let mut last = ComplexValue::new(0.0, 0.0);
    let mut settled = 0;
    let panels = tol.max_terms.min(MAX_PANELS);
    for k in 0..panels {
        let (a, b) = (k as f64 * PI, (k + 1) as f64 * PI);
        let budget = Tolerance { max_evals: tol.max_evals.saturating_sub(n_evals).max(1), ..panel_tol };
        let r = integrate_adaptive(
            |u| {
                let w = match osc {
                    Oscillator::Cos => libm::cos(u),
                    Oscillator::Sin => libm::sin(u),
                };
                g(u) * w
            },
            a,
            b,
            &budget,
        );
        n_evals += r.n_evals;
        quad_err += r.err_estimate;
        if !r.converged || n_evals >= tol.max_evals {
            return Err(Error::NoConvergence { terms: k + 1, partial: euler.push(r.value) });
        }
        let est = euler.push(r.value);
        let change = (est - last).norm();
        last = est;
        if k >= 5 && tol.accepts(change, est.norm()) {
            settled += 1;
            if settled == SETTLED {
                let err_estimate = quad_err + change;
                return Ok(QuadratureResult {
                    value: est,
                    err_estimate,
                    n_evals,
                    converged: tol.accepts(err_estimate, est.norm()),
                });
            }
        } else {
            settled = 0;
        }
    }
    Err(Error::NoConvergence { terms: panels, partial: last })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> ComplexValue {
        ComplexValue::new(x, 0.0)
    }

    #[test]
    fn euler_sums_alternating_harmonic() {
        let mut e = EulerSum::new();
        let mut v = ComplexValue::new(0.0, 0.0);
        for k in 0..40 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            v = e.push(c(sign / (k as f64 + 1.0)));
        }
        assert!((v.re - core::f64::consts::LN_2).abs() < 1e-13, "{}", v.re);
    }

    #[test]
    fn lorentzian_cosine_transform() {
        let r = integrate_oscillatory(|u| c(1.0 / (1.0 + u * u)), Oscillator::Cos, &Tolerance::uniform(1e-11)).unwrap();
        let exact = core::f64::consts::FRAC_PI_2 / core::f64::consts::E;
        assert!((r.value.re - exact).abs() < 1e-10, "{} vs {exact}", r.value.re);
    }

    #[test]
    fn zero_integrand() {
        let r = integrate_oscillatory(|_| c(0.0), Oscillator::Cos, &Tolerance::uniform(1e-12)).unwrap();
        assert_eq!(r.value, c(0.0));
    }

    #[test]
    fn sine_kernel_with_slow_decay() {
        // ∫ u sin u /(u² + 1) = (π/2) e^{-1}
        let r = integrate_oscillatory(|u| c(u / (u * u + 1.0)), Oscillator::Sin, &Tolerance::uniform(1e-11)).unwrap();
        let exact = core::f64::consts::FRAC_PI_2 / core::f64::consts::E;
        assert!((r.value.re - exact).abs() < 1e-10, "{} vs {exact}", r.value.re);
    }
}
