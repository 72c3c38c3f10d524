//! Small-`y` expansion of `Σ log(n)/(e^{ny} − 1)`:
//!
//! `log²y/(2y) + (π²/12 − γ²/2)/y − ¼ log 2π + Σ_{k≥1} c_k y^{2k−1}`,
//!
//! `c_k = B_{2k}/k · {B_{2k}/(2(2k)!)(γ − H_{2k−1} + log 2π) + (−1)^k ζ′(2k)/(2π)^{2k}}`,
//! where `c_1` collapses to `(log A − 1/12)/12`.

use alloc::vec::Vec;

use crate::error::{domain, Result};
use crate::numerics::bernoulli::bernoulli_extended;
use crate::numerics::{ComplexValue, ExtendedValue, NeumaierComplex, Tolerance};
use crate::report::{params, IdentityId, IdentityReport};
use crate::special::{extended_constants, zeta_prime_even_extended, ZETA_PRIME_EVEN_CAP};

use super::direct::{lambert_log_lhs, lambert_log_lhs_extended};
use super::LambertParams;

/// Largest truncation order with a computable next term.
pub const MAX_EXPANSION_ORDER: usize = ZETA_PRIME_EVEN_CAP - 1;

/// A truncated expansion and the first omitted term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogExpansion {
    pub value: ComplexValue,
    /// `c_{K+1} y^{2K+1}`.
    pub next_term: ComplexValue,
    pub order: usize,
}

/// Real-`y` expansion in double-word.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogExpansionExtended {
    pub value: ExtendedValue,
    pub next_term: f64,
    pub order: usize,
}

/// `c_1, …, c_m` in double-word.
fn coefficients(m: usize) -> Result<Vec<ExtendedValue>> {
    let k = extended_constants();
    let mut out = Vec::with_capacity(m);
    out.push((k.log_glaisher - ExtendedValue::ONE / ExtendedValue::new(12.0)) / ExtendedValue::new(12.0));
    let mut harmonic = ExtendedValue::ONE; // H_1
    let mut factorial = ExtendedValue::new(2.0); // 2!
    let mut tau_power = ExtendedValue::TAU.sqr(); // (2π)²
    for j in 2..=m {
        let (a, b) = ((2 * j - 2) as f64, (2 * j - 1) as f64);
        harmonic = harmonic + ExtendedValue::ONE / ExtendedValue::new(a) + ExtendedValue::ONE / ExtendedValue::new(b);
        factorial = factorial.mul_f64(b).mul_f64(b + 1.0);
        tau_power *= ExtendedValue::TAU.sqr();
        let b2k = bernoulli_extended(2 * j);
        let bracket = k.euler_gamma - harmonic + k.ln_tau;
        let zp = zeta_prime_even_extended(j)? / tau_power;
        let signed = if j % 2 == 0 { zp } else { -zp };
        let inner = b2k / (factorial.mul_f64(2.0)) * bracket + signed;
        out.push(b2k * inner / ExtendedValue::new(j as f64));
    }
    Ok(out)
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_EXPANSION_ORDER {
        return Err(domain(alloc::format!("expansion order must be in 1..={MAX_EXPANSION_ORDER}, got {order}")));
    }
    Ok(())
}

/// The expansion through `c_K y^{2K−1}`, for `|arg y| < π/2`.
pub fn asymptotic_logy0(y: ComplexValue, order: usize) -> Result<LogExpansion> {
    check_order(order)?;
    if !(y.re > 0.0) || !y.im.is_finite() {
        return Err(domain(alloc::format!("the expansion needs |arg y| < pi/2, got {y}")));
    }
    let coeff = coefficients(order + 1)?;
    let k = extended_constants();
    let (g, pi) = (k.euler_gamma.to_f64(), core::f64::consts::PI);
    let ly = y.ln();
    let mut acc = NeumaierComplex::new();
    acc.add(ly * ly / (y * 2.0));
    acc.add(ComplexValue::new(pi * pi / 12.0 - 0.5 * g * g, 0.0) / y);
    acc.add(ComplexValue::new(-0.25 * k.ln_tau.to_f64(), 0.0));
    let y2 = y * y;
    let mut power = y;
    for c in &coeff[..order] {
        acc.add(power * c.to_f64());
        power *= y2;
    }
    Ok(LogExpansion { value: acc.value(), next_term: power * coeff[order].to_f64(), order })
}

/// [`asymptotic_logy0`] for real `y > 0` in double-word.
pub fn asymptotic_logy0_extended(y: f64, order: usize) -> Result<LogExpansionExtended> {
    check_order(order)?;
    if !(y > 0.0) || !y.is_finite() {
        return Err(domain(alloc::format!("the real expansion needs y > 0, got {y}")));
    }
    let coeff = coefficients(order + 1)?;
    let k = extended_constants();
    let ye = ExtendedValue::new(y);
    let ly = ye.ln()?;
    let pi2 = ExtendedValue::PI.sqr();
    let mut acc = ly.sqr() / ye.mul_f64(2.0);
    acc += (pi2 / ExtendedValue::new(12.0) - k.euler_gamma.sqr().mul_f64(0.5)) / ye;
    acc += k.ln_tau.mul_f64(-0.25);
    let y2 = ye.sqr();
    let mut power = ye;
    for c in &coeff[..order] {
        acc += *c * power;
        power *= y2;
    }
    Ok(LogExpansionExtended { value: acc, next_term: (coeff[order] * power).to_f64(), order })
}

/// Direct sum against the expansion through order `K`; passes when the
/// difference is within ten times the first omitted term. Real `y` runs in
/// double-word so omitted terms far below binary64 resolution stay visible.
pub fn lambert_asymptotic_check(y: ComplexValue, order: usize, max_terms: usize) -> Result<IdentityReport> {
    // (lhs, rhs, lhs − rhs, |next term|, terms)
    let (lhs, rhs, diff, next, terms) = if y.im == 0.0 {
        let (direct, used) = lambert_log_lhs_extended(y.re, max_terms)?;
        let e = asymptotic_logy0_extended(y.re, order)?;
        let (l, r) = (ComplexValue::new(direct.to_f64(), 0.0), ComplexValue::new(e.value.to_f64(), 0.0));
        (l, r, (direct - e.value).to_f64(), e.next_term.abs(), used)
    } else {
        let e = asymptotic_logy0(y, order)?;
        let tol = Tolerance { max_terms, ..Tolerance::relative(1e-16) };
        let direct = lambert_log_lhs(&LambertParams::new(y, tol)?)?;
        (direct.value, e.value, (direct.value - e.value).norm(), e.next_term.norm(), direct.terms_used)
    };
    let tol = Tolerance { abs_tol: 10.0 * next, rel_tol: 0.0, ..Tolerance::default() };
    let mut report = IdentityReport::compare(
        IdentityId::LambertAsymptotic,
        params(&[("y", y), ("K", ComplexValue::new(order as f64, 0.0))]),
        lhs,
        rhs,
        &tol,
    );
    // the difference may sit below the resolution of the binary64 copies
    report.abs_err = diff.abs();
    report.rel_err = report.abs_err / lhs.norm();
    report.pass = report.abs_err <= tol.abs_tol;
    Ok(report.with_costs(terms, 0))
}
