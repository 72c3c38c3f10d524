//! Exponentially smoothed moments of `ζ` on the critical line,
//! `∫₀^∞ f(t) e^{−δt} dt` as `δ → 0`, for `f = |ζ(½+it)|²` and
//! `f = ζ(½−it)ζ′(½+it)`, together with the rotated Lambert series that
//! carries the singular part of the second.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use crate::error::{domain, Error, Result};
use crate::numerics::{integrate_adaptive, ComplexValue, NeumaierComplex, QuadratureResult, Tolerance};
use crate::special::{euler_gamma, zeta_pair};

mod rotated;
mod suite;

pub use rotated::{phi_remainder, rotated_point, rotated_series_check, rotated_series_route, RotatedSeries};
pub use suite::{moment_suite, MomentSuite, SuiteKind, CONJUGATE_TOL, T_CAP_DRIFT_TOL};

/// Panel width in `t`; each panel sees at most about one oscillation of `ζ`.
pub const PANEL_WIDTH: f64 = 0.5;
/// `δ·t_cap` at the default cutoff; `e^{−40}` leaves the tail below `1e−17`.
pub const CUTOFF_DECAYS: f64 = 40.0;

/// Smoothing parameter, tolerance and cutoff of one moment integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentParams {
    pub delta: f64,
    pub tol: Tolerance,
    pub t_cap: f64,
}

impl MomentParams {
    /// `t_cap = 40/δ`.
    pub fn new(delta: f64, tol: Tolerance) -> Result<Self> {
        if !(delta > 0.0 && delta < PI) {
            return Err(domain(alloc::format!("delta must lie in (0, pi), got {delta}")));
        }
        Ok(MomentParams { delta, tol, t_cap: CUTOFF_DECAYS / delta })
    }

    pub fn with_t_cap(self, t_cap: f64) -> Result<Self> {
        if !(t_cap >= CUTOFF_DECAYS / self.delta) || !t_cap.is_finite() {
            return Err(domain(alloc::format!(
                "t_cap must be at least 40/delta = {}, got {t_cap}",
                CUTOFF_DECAYS / self.delta
            )));
        }
        Ok(MomentParams { t_cap, ..self })
    }
}

/// A smoothed moment, its closed-form main term and their difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentReport {
    pub delta: f64,
    pub t_cap: f64,
    pub integral: ComplexValue,
    pub leading: ComplexValue,
    /// `integral − leading`, kept however large.
    pub residual: ComplexValue,
    /// `integral` minus the exact singular part; equals `residual` for `|ζ|²`.
    pub singular_residual: ComplexValue,
    pub err_estimate: f64,
    pub evals: usize,
}

/// `ζ(½−it)·ζ′(½+it)`.
pub fn zeta_pair_integrand(t: f64) -> Result<ComplexValue> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(domain(alloc::format!("the moment integrand needs t >= 0, got {t}")));
    }
    let (z_minus, _) = zeta_pair(ComplexValue::new(0.5, -t))?;
    let (_, zp_plus) = zeta_pair(ComplexValue::new(0.5, t))?;
    Ok(z_minus * zp_plus)
}

/// `ζ(½+it)·ζ′(½−it)`, the mirrored integrand.
pub fn zeta_pair_integrand_mirrored(t: f64) -> Result<ComplexValue> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(domain(alloc::format!("the moment integrand needs t >= 0, got {t}")));
    }
    let (z_plus, _) = zeta_pair(ComplexValue::new(0.5, t))?;
    let (_, zp_minus) = zeta_pair(ComplexValue::new(0.5, -t))?;
    Ok(z_plus * zp_minus)
}

/// `|ζ(½+it)|²`.
pub fn zeta_square_integrand(t: f64) -> Result<ComplexValue> {
    let (z, _) = zeta_pair(ComplexValue::new(0.5, t))?;
    Ok(ComplexValue::new(z.norm_sqr(), 0.0))
}

fn check_leading(delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta < TAU) {
        return Err(domain(alloc::format!("the main term needs 0 < delta < 2 pi, got {delta}")));
    }
    Ok(())
}

/// `(γ² − π²/6 − log²(2πδ))/(4 sin(δ/2))`.
pub fn moment_leading_term(delta: f64) -> Result<ComplexValue> {
    check_leading(delta)?;
    let g = euler_gamma();
    let l = libm::log(TAU * delta);
    Ok(ComplexValue::new((g * g - PI * PI / 6.0 - l * l) / (4.0 * libm::sin(0.5 * delta)), 0.0))
}

/// `(γ² − π²/6 − log²y)/(4 sin(δ/2))` at `y = 4π sin(δ/2) e^{−iδ/2}`, the
/// exact singular part of the `ζζ′` moment. Its imaginary part
/// `δ log(4π sin(δ/2))/(4 sin(δ/2)) ~ ½ log(2πδ)` is absent from
/// [`moment_leading_term`], so residuals against that term drift
/// logarithmically in their imaginary part.
pub fn moment_singular_term(delta: f64) -> Result<ComplexValue> {
    check_leading(delta)?;
    let g = euler_gamma();
    let ly = ComplexValue::new(libm::log(2.0 * TAU * libm::sin(0.5 * delta)), -0.5 * delta);
    Ok((ComplexValue::new(g * g - PI * PI / 6.0, 0.0) - ly * ly) / (4.0 * libm::sin(0.5 * delta)))
}

/// `(γ − log(2πδ))/(2 sin(δ/2))`.
pub fn second_moment_leading_term(delta: f64) -> Result<ComplexValue> {
    check_leading(delta)?;
    Ok(ComplexValue::new((euler_gamma() - libm::log(TAU * delta)) / (2.0 * libm::sin(0.5 * delta)), 0.0))
}

/// `∫₀^{t_cap} f(t) e^{−δt} dt` over fixed panels, reduced in panel order.
pub fn smoothed_integral<F>(f: F, p: &MomentParams) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<ComplexValue>,
{
    let panels = libm::ceil(p.t_cap / PANEL_WIDTH) as usize;
    // each panel gets an equal share of the absolute allowance
    let per_panel = Tolerance { abs_tol: p.tol.abs_tol / panels as f64, ..p.tol.tightened(10.0) };
    let mut acc = NeumaierComplex::new();
    let mut err = 0.0;
    let mut evals = 0;
    let mut failure: Option<Error> = None;
    for k in 0..panels {
        let a = k as f64 * PANEL_WIDTH;
        let b = (a + PANEL_WIDTH).min(p.t_cap);
        let q = integrate_adaptive(
            |t| match f(t) {
                Ok(v) => v * libm::exp(-p.delta * t),
                Err(e) => {
                    failure.get_or_insert(e);
                    ComplexValue::new(f64::NAN, f64::NAN)
                }
            },
            a,
            b,
            &per_panel,
        );
        if let Some(e) = failure.take() {
            return Err(e);
        }
        if !q.converged {
            return Err(Error::Quadrature { value: q.value, err_estimate: q.err_estimate });
        }
        acc.add(q.value);
        err += q.err_estimate;
        evals += q.n_evals;
    }
    Ok(QuadratureResult { value: acc.value(), err_estimate: err, n_evals: evals, converged: true })
}

fn report(p: &MomentParams, q: QuadratureResult, leading: ComplexValue, singular: ComplexValue) -> MomentReport {
    MomentReport {
        delta: p.delta,
        t_cap: p.t_cap,
        integral: q.value,
        leading,
        residual: q.value - leading,
        singular_residual: q.value - singular,
        err_estimate: q.err_estimate,
        evals: q.n_evals,
    }
}

/// `∫₀^∞ ζ(½−it)ζ′(½+it) e^{−δt} dt` against [`moment_leading_term`].
pub fn smoothed_moment(p: &MomentParams) -> Result<MomentReport> {
    let q = smoothed_integral(zeta_pair_integrand, p)?;
    Ok(report(p, q, moment_leading_term(p.delta)?, moment_singular_term(p.delta)?))
}

/// `∫₀^∞ ζ(½+it)ζ′(½−it) e^{−δt} dt`, which must equal the conjugate of
/// [`smoothed_moment`].
pub fn mirrored_moment(p: &MomentParams) -> Result<QuadratureResult> {
    smoothed_integral(zeta_pair_integrand_mirrored, p)
}

/// `∫₀^∞ |ζ(½+it)|² e^{−δt} dt` against [`second_moment_leading_term`].
pub fn sw2nd_calibration(p: &MomentParams) -> Result<MomentReport> {
    let q = smoothed_integral(zeta_square_integrand, p)?;
    let leading = second_moment_leading_term(p.delta)?;
    Ok(report(p, q, leading, leading))
}

/// `|R(δ₂) − R(δ₃)| < |R(δ₁) − R(δ₂)|` for residuals at shrinking `δ`.
pub fn cauchy_shrinks(residuals: &[ComplexValue]) -> bool {
    residuals.len() >= 3 && residuals.windows(3).all(|w| (w[1] - w[2]).norm() < (w[0] - w[1]).norm())
}

/// Limit of residuals at `δ, δ/2, δ/4, …` assuming `R(δ) = d₀ + d₁δ + O(δ²)`:
/// one Richardson step on the two finest values.
pub fn extract_constant(residuals: &[ComplexValue]) -> Option<ComplexValue> {
    match residuals {
        [.., coarse, fine] => Some(*fine * 2.0 - *coarse),
        _ => None,
    }
}

/// Halves `δ` from `start` `count` times.
pub fn halving_grid(start: f64, count: usize) -> Vec<f64> {
    (0..count).map(|k| start * libm::pow(0.5, k as f64)).collect()
}

#[cfg(test)]
mod tests;
