//! `Σ d(n) log(n) e^{−ny}` at `y = 2πi(e^{−iδ} − 1)`, where `e^{−ny}` equals
//! `exp(−2πin e^{−iδ})`. Weighted by `πe^{−iδ/2}` it holds the whole
//! singular part of the `ζζ′` moment:
//!
//! `φ(δ) = ∫₀^∞ ζ(½−it)ζ′(½+it)e^{−δt}dt + πe^{−iδ/2}Σ
//!        − ie^{iδ/2}(γ²/2 − π²/12 − ½log²(2πie^{−iδ}))`
//!
//! is analytic for `|δ| < π` away from `−π/2`.

use core::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{domain, Result};
use crate::lambert::{lambert_log_lhs, lambert_log_rhs, LambertParams};
use crate::numerics::{ComplexValue, Tolerance};
use crate::report::{params, IdentityId, IdentityReport};
use crate::special::euler_gamma;

use super::MomentReport;

/// Both routes to the rotated divisor-log series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatedSeries {
    pub delta: f64,
    pub y: ComplexValue,
    /// `2 Σ log(n)/(e^{ny} − 1)` summed directly.
    pub direct: ComplexValue,
    /// The same through the ψ₁ bracket transform.
    pub transformed: ComplexValue,
    pub terms: usize,
}

impl RotatedSeries {
    /// `πe^{−iδ/2} Σ d(n) log(n) e^{−ny}` from the direct route.
    pub fn weighted(&self) -> ComplexValue {
        ComplexValue::from_polar(PI, -0.5 * self.delta) * self.direct
    }
}

/// `2πi(e^{−iδ} − 1) = 4π sin(δ/2) e^{−iδ/2}`, so `Re y = 2π sin δ`.
pub fn rotated_point(delta: f64) -> ComplexValue {
    ComplexValue::from_polar(2.0 * TAU * libm::sin(0.5 * delta), -0.5 * delta)
}

pub fn rotated_series_route(delta: f64, tol: &Tolerance) -> Result<RotatedSeries> {
    if !(delta > 0.0 && delta < FRAC_PI_2) {
        return Err(domain(alloc::format!("the rotated route needs 0 < delta < pi/2, got {delta}")));
    }
    let y = rotated_point(delta);
    let p = LambertParams::new(y, tol.tightened(10.0))?;
    let lhs = lambert_log_lhs(&p)?;
    let rhs = lambert_log_rhs(&p)?;
    Ok(RotatedSeries {
        delta,
        y,
        direct: lhs.value * 2.0,
        transformed: rhs.value * 2.0,
        terms: lhs.terms_used + rhs.terms_used,
    })
}

pub fn rotated_series_check(delta: f64, tol: &Tolerance) -> Result<IdentityReport> {
    let r = rotated_series_route(delta, tol)?;
    Ok(IdentityReport::compare(
        IdentityId::RotatedSeries,
        params(&[("delta", ComplexValue::new(delta, 0.0)), ("y", r.y)]),
        r.direct,
        r.transformed,
        tol,
    )
    .with_costs(r.terms, 0))
}

/// `φ(δ)` from a moment and the rotated series at the same `δ`.
pub fn phi_remainder(moment: &MomentReport, rotated: &RotatedSeries) -> Result<ComplexValue> {
    if moment.delta != rotated.delta {
        return Err(domain("moment and rotated series must share delta"));
    }
    let d = moment.delta;
    let g = euler_gamma();
    // log(2πie^{−iδ}) = log 2π + i(π/2 − δ)
    let l = ComplexValue::new(libm::log(TAU), FRAC_PI_2 - d);
    let block = ComplexValue::new(0.5 * g * g - PI * PI / 12.0, 0.0) - l * l * 0.5;
    let i_rot = ComplexValue::from_polar(1.0, FRAC_PI_2 + 0.5 * d);
    Ok(moment.integral + rotated.weighted() - i_rot * block)
}
