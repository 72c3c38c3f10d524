//! The kernel `K(w)`, its digamma series, the Mittag-Leffler `b`-derivative
//! and the ψ₁ expansion, each checked against an independent route.

use crate::error::{domain, Error, Result};
use crate::numerics::{integrate_oscillatory, ComplexValue, NeumaierComplex, Oscillator, QuadratureResult, Tolerance};
use crate::report::{params, IdentityId, IdentityReport};
use crate::special::{
    euler_gamma, ml_d2b_at1, psi1_asymptotic, psi1_optimal_terms, psi1_reference, sinhshi_minus_coshchi, D2bMode,
};

use super::check_right_half_plane;

/// `∫₀^∞ t cos t/(t² + w²) dt` by oscillatory quadrature.
pub fn kernel_quadrature(w: ComplexValue, tol: &Tolerance) -> Result<QuadratureResult> {
    check_right_half_plane(w)?;
    let w2 = w * w;
    integrate_oscillatory(|t| (ComplexValue::new(t * t, 0.0) + w2).inv() * t, Oscillator::Cos, tol)
}

/// Closed form `sinh(w)Shi(w) − cosh(w)Chi(w)` against quadrature.
pub fn kernel_integral_check(w: ComplexValue, tol: &Tolerance) -> Result<IdentityReport> {
    let closed = sinhshi_minus_coshchi(w)?;
    let q = kernel_quadrature(w, &tol.tightened(10.0))?;
    if !q.converged {
        return Err(Error::Quadrature { value: q.value, err_estimate: q.err_estimate });
    }
    Ok(IdentityReport::compare(IdentityId::KernelIntegral, params(&[("w", w)]), closed, q.value, tol)
        .with_costs(0, q.n_evals))
}

/// A partial sum and a bound on what it leaves out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPartial {
    pub value: ComplexValue,
    pub tail_bound: f64,
}

/// `Σ_{k=0}^{K} ψ(2k+1) w^{2k}/(2k)!`.
///
/// Since `0 < ψ(2k+1) < 2k` for `k >= 1`, the tail is below
/// `Σ_{k>K} |w|^{2k}/(2k−1)!`, which is bounded geometrically.
pub fn digamma_power_series(w: ComplexValue, order: usize) -> Result<SeriesPartial> {
    check_right_half_plane(w)?;
    let w2 = w * w;
    let mut power = ComplexValue::new(1.0, 0.0);
    let mut harmonic = 0.0;
    let mut acc = NeumaierComplex::new();
    acc.add(ComplexValue::new(-euler_gamma(), 0.0));
    for k in 1..=order {
        let (a, b) = ((2 * k - 1) as f64, (2 * k) as f64);
        power = power * w2 / (a * b);
        harmonic += 1.0 / a + 1.0 / b;
        acc.add(power * (harmonic - euler_gamma()));
    }
    let r = w2.norm();
    let k = order as f64 + 1.0;
    // |w|^{2K+2}/(2K+1)! and ratio |w|²/((2K+2)(2K+3)) onwards
    let mut lead = 1.0;
    for j in 1..=(2 * order + 1) {
        lead *= libm::sqrt(r) / j as f64;
    }
    lead *= libm::sqrt(r);
    let ratio = r / ((2.0 * k) * (2.0 * k + 1.0));
    let tail_bound = if ratio < 1.0 { lead / (1.0 - ratio) } else { f64::INFINITY };
    Ok(SeriesPartial { value: acc.value(), tail_bound })
}

/// Digamma series against `K(w) + log(w)cosh(w)`, summed until the tail
/// bound meets the tolerance.
pub fn digamma_series_check(w: ComplexValue, tol: &Tolerance) -> Result<IdentityReport> {
    check_right_half_plane(w)?;
    let rhs = sinhshi_minus_coshchi(w)? + w.ln() * w.cosh();
    let inner = tol.tightened(10.0);
    for order in 1..=tol.max_terms.min(2000) {
        let s = digamma_power_series(w, order)?;
        if inner.accepts(s.tail_bound, s.value.norm()) {
            return Ok(IdentityReport::compare(IdentityId::DigammaSeries, params(&[("w", w)]), s.value, rhs, tol)
                .with_costs(order + 1, 0));
        }
    }
    Err(Error::NoConvergence { terms: tol.max_terms.min(2000), partial: rhs })
}

/// Series and integral forms of `∂²_b E_{2,b}(w²)` at `b = 1`.
pub fn ml_derivative_check(w: ComplexValue, tol: &Tolerance) -> Result<IdentityReport> {
    let series = ml_d2b_at1(w, D2bMode::Series)?;
    // the integral form carries quadrature error; ask it for a tenth, but not below its floor
    let quad_tol =
        Tolerance { abs_tol: (tol.abs_tol / 10.0).max(1e-11), rel_tol: (tol.rel_tol / 10.0).max(1e-11), ..*tol };
    let integral = ml_d2b_at1(w, D2bMode::Integral(quad_tol))?;
    Ok(IdentityReport::compare(IdentityId::MlDerivative, params(&[("w", w)]), series, integral, tol))
}

/// Reference ψ₁ against its expansion at the resolution-aware optimal
/// truncation; passes within twice the first omitted term.
pub fn psi1_asymptotic_check(z: ComplexValue) -> Result<IdentityReport> {
    if z.norm() < 2.0 {
        return Err(domain("the psi1 expansion check needs |z| >= 2"));
    }
    let reference = psi1_reference(z)?;
    let terms = psi1_optimal_terms(z);
    let t = psi1_asymptotic(z, terms)?;
    let tol = Tolerance { abs_tol: 2.0 * t.first_omitted, rel_tol: 0.0, ..Tolerance::default() };
    Ok(IdentityReport::compare(IdentityId::Psi1Asymptotic, params(&[("z", z)]), reference, t.value, &tol)
        .with_costs(terms, 0))
}
