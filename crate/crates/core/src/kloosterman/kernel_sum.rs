//! `Σ_{n≥1} K(nw) = ½{log(w/2π) − ½(ψ(iw/2π) + ψ(−iw/2π))}`.

use core::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::numerics::{
    integrate_oscillatory, ComplexValue, NeumaierComplex, Oscillator, QuadratureResult, SumResult, Tolerance,
};
use crate::report::{params, IdentityId, IdentityReport};
use crate::special::{digamma, sinhshi_minus_coshchi, zeta_tail};

use super::{check_right_half_plane, i_times, KERNEL_TAIL_REAL};

const MAX_ORDERS: usize = 40;
/// Terms cross-checked by quadrature.
const QUADRATURE_TERMS: usize = 3;

/// `Σ_{n≥1} K(nw)`: closed-form kernels while `Re(nw) < 40`, then
/// `−Σ_j (2j−1)! w^{−2j} Σ_{n≥N} n^{−2j}` at its smallest term.
pub fn kernel_sum_lhs(w: ComplexValue) -> Result<SumResult> {
    check_right_half_plane(w)?;
    let n_tail = (libm::ceil(KERNEL_TAIL_REAL / w.re) as usize).max(1);
    let mut acc = NeumaierComplex::new();
    for n in 1..n_tail {
        acc.add(sinhshi_minus_coshchi(w * n as f64)?);
    }
    let inv2 = (w * w).inv();
    let mut power = ComplexValue::new(1.0, 0.0);
    let mut factorial = 1.0; // (2j − 1)!
    let mut prev = f64::INFINITY;
    let mut used = 0;
    for j in 1..=MAX_ORDERS {
        power *= inv2;
        if j > 1 {
            factorial *= ((2 * j - 2) * (2 * j - 1)) as f64;
        }
        let (z, _) = zeta_tail(ComplexValue::new(2.0 * j as f64, 0.0), n_tail)?;
        let t = -power * z * factorial;
        if t.norm() >= prev {
            break;
        }
        acc.add(t);
        used = j;
        prev = t.norm();
        if prev <= 1e-18 * acc.value().norm() {
            break;
        }
    }
    Ok(SumResult { value: acc.value(), terms_used: n_tail - 1 + used })
}

/// `½{log(w/2π) − ½(ψ(iw/2π) + ψ(−iw/2π))}`.
pub fn kernel_sum_rhs(w: ComplexValue) -> Result<ComplexValue> {
    check_right_half_plane(w)?;
    let x = i_times(w) / TAU;
    Ok(((w / TAU).ln() - (digamma(x)? + digamma(-x)?) * 0.5) * 0.5)
}

/// `∫₀^∞ t cos t/(t² + n²w²) dt` by oscillatory quadrature.
pub fn kernel_sum_term_quadrature(n: usize, w: ComplexValue, tol: &Tolerance) -> Result<QuadratureResult> {
    check_right_half_plane(w)?;
    let nw2 = (w * n as f64) * (w * n as f64);
    integrate_oscillatory(|t| (ComplexValue::new(t * t, 0.0) + nw2).inv() * t, Oscillator::Cos, tol)
}

/// Kernel sum against the digamma form. The first three kernels are also
/// integrated numerically; a disagreement beyond the tolerance fails the
/// report.
pub fn kernel_sum_check(w: ComplexValue, tol: &Tolerance) -> Result<IdentityReport> {
    let lhs = kernel_sum_lhs(w)?;
    let rhs = kernel_sum_rhs(w)?;
    let mut report = IdentityReport::compare(IdentityId::KernelSum, params(&[("w", w)]), lhs.value, rhs, tol);
    let mut evals = 0;
    for n in 1..=QUADRATURE_TERMS {
        let q = kernel_sum_term_quadrature(n, w, &tol.tightened(10.0))?;
        if !q.converged {
            return Err(Error::Quadrature { value: q.value, err_estimate: q.err_estimate });
        }
        evals += q.n_evals;
        let closed = sinhshi_minus_coshchi(w * n as f64)?;
        if !tol.accepts((q.value - closed).norm(), closed.norm()) {
            report.pass = false;
        }
    }
    Ok(report.with_costs(lhs.terms_used, evals))
}
