//! Exact Lambert-series transformations, each checked by evaluating both
//! sides independently at a tenth of the comparison tolerance.

use core::f64::consts::{PI, TAU};

use crate::error::{domain, Error, Result};
use crate::numerics::bernoulli::bernoulli_f64;
use crate::numerics::{ComplexValue, NeumaierComplex, SumResult, Tolerance, BERNOULLI_CAP};
use crate::report::{params, IdentityId, IdentityReport};
use crate::special::{euler_gamma, zeta};

use super::brackets::{digamma_bracket_sum, psi1_bracket_sum};
use super::direct::{divisor_log_form, lambert_factor, lambert_gamma_log, lambert_log_lhs, lambert_plain};
use super::LambertParams;

fn real(x: f64) -> ComplexValue {
    ComplexValue::new(x, 0.0)
}

fn inner(p: &LambertParams) -> LambertParams {
    LambertParams { y: p.y, tol: p.tol.tightened(10.0) }
}

/// Transformed side of the log-Lambert identity:
/// `−¼ log 2π + log²y/(2y) − γ²/(2y) + π²/(12y) − (2/y)(γ + log y)·D + (1/y)·P`
/// with `D`, `P` the digamma and ψ₁ bracket series.
pub fn lambert_log_rhs(p: &LambertParams) -> Result<SumResult> {
    let y = p.y;
    let g = euler_gamma();
    let ly = y.ln();
    let d = digamma_bracket_sum(p)?;
    let b = psi1_bracket_sum(p)?;
    let mut acc = NeumaierComplex::new();
    acc.add(real(-0.25 * libm::log(TAU)));
    acc.add(ly * ly / (y * 2.0));
    acc.add(real(PI * PI / 12.0 - 0.5 * g * g) / y);
    acc.add(-(ly + g) * d.value * 2.0 / y);
    acc.add(b.value / y);
    Ok(SumResult { value: acc.value(), terms_used: d.terms() + b.terms() })
}

/// Direct log-Lambert sum against its ψ₁ transform.
pub fn lambert_log_check(p: &LambertParams) -> Result<IdentityReport> {
    let q = inner(p);
    let lhs = lambert_log_lhs(&q)?;
    let rhs = lambert_log_rhs(&q)?;
    Ok(IdentityReport::compare(IdentityId::LambertLog, params(&[("y", p.y)]), lhs.value, rhs.value, &p.tol)
        .with_costs(lhs.terms_used + rhs.terms_used, 0))
}

/// The equivalent form isolating the ψ₁ bracket series:
/// `y Σ (γ+log(ny))/(e^{ny}−1) − ¼ y log y + y(¼ log 2π − γ/4) + ½ log²y − γ²/2 − π²/12 = P`.
pub fn lambert_log_alt_check(p: &LambertParams) -> Result<IdentityReport> {
    let q = inner(p);
    let y = p.y;
    let g = euler_gamma();
    let ly = y.ln();
    let rhs = psi1_bracket_sum(&q)?;
    // the closed-form block cancels most of y·Σ, so the series gets an
    // absolute allowance scaled to the bracket value
    let abs = q.tol.allowance(rhs.value.norm()) / y.norm();
    let series_tol = Tolerance { abs_tol: abs, rel_tol: 0.0, ..q.tol };
    let direct = lambert_gamma_log(&LambertParams { y, tol: series_tol })?;
    let mut lhs = NeumaierComplex::new();
    lhs.add(y * direct.value);
    lhs.add(-y * ly * 0.25);
    lhs.add(y * (0.25 * libm::log(TAU) - 0.25 * g));
    lhs.add(ly * ly * 0.5);
    lhs.add(real(-0.5 * g * g - PI * PI / 12.0));
    Ok(IdentityReport::compare(IdentityId::LambertLogAlt, params(&[("y", y)]), lhs.value(), rhs.value, &p.tol)
        .with_costs(direct.terms_used + rhs.terms(), 0))
}

/// `Σ 1/(e^{ny}−1) = ¼ + (γ − log y)/y + (2/y)·D`.
pub fn wigert_check(p: &LambertParams) -> Result<IdentityReport> {
    let q = inner(p);
    let y = p.y;
    let lhs = lambert_plain(&q)?;
    let d = digamma_bracket_sum(&q)?;
    let rhs = real(0.25) + (real(euler_gamma()) - y.ln()) / y + d.value * 2.0 / y;
    Ok(IdentityReport::compare(IdentityId::Wigert, params(&[("y", y)]), lhs.value, rhs, &p.tol)
        .with_costs(lhs.terms_used + d.terms(), 0))
}

/// `Σ log(n)/(e^{ny}−1)` against `½ Σ d(n) log(n) e^{−ny}`.
pub fn divisor_form_check(p: &LambertParams) -> Result<IdentityReport> {
    let q = inner(p);
    let lhs = lambert_log_lhs(&q)?;
    let rhs = divisor_log_form(&q)?;
    Ok(IdentityReport::compare(IdentityId::DivisorForm, params(&[("y", p.y)]), lhs.value, rhs.value, &p.tol)
        .with_costs(lhs.terms_used + rhs.terms_used, 0))
}

/// `½ζ(2m+1) + Σ n^{−2m−1}/(e^{2xn} − 1)`.
fn ramanujan_side(m: i32, x: f64, tol: &Tolerance) -> Result<SumResult> {
    let s = -(2 * m + 1) as f64;
    let mut acc = NeumaierComplex::new();
    acc.add(zeta(real(-s))? * 0.5);
    let y = real(2.0 * x);
    let q = libm::exp(-2.0 * x);
    for n in 1..=tol.max_terms {
        let nf = n as f64;
        let t = lambert_factor(nf, y) * libm::pow(nf, s);
        acc.add(t);
        // later terms shrink at least by ratio r = q·((n+1)/n)^{max(s,0)}
        let r = q * libm::pow((nf + 1.0) / nf, s.max(0.0));
        if r < 1.0 && t.norm() * r / (1.0 - r) / (1.0 - q) <= tol.allowance(acc.value().norm()) {
            return Ok(SumResult { value: acc.value(), terms_used: n });
        }
    }
    Err(Error::NoConvergence { terms: tol.max_terms, partial: acc.value() })
}

/// `2^{2m} Σ_{j=0}^{m+1} (−1)^j B_{2j} B_{2m+2−2j}/((2j)!(2m+2−2j)!) α^{m+1−j} β^j`.
pub fn ramanujan_bernoulli_block(m: i32, alpha: f64, beta: f64) -> f64 {
    if m + 1 < 0 {
        return 0.0;
    }
    let top = (m + 1) as usize;
    let fact = |n: usize| (1..=n).fold(1.0, |a, k| a * k as f64);
    let mut acc = 0.0;
    for j in 0..=top {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let (a, b) = (2 * j, 2 * top - 2 * j);
        acc += sign * bernoulli_f64(a) * bernoulli_f64(b) / (fact(a) * fact(b))
            * libm::pow(alpha, (top - j) as f64)
            * libm::pow(beta, j as f64);
    }
    libm::pow(2.0, 2.0 * m as f64) * acc
}

/// Odd-zeta transformation for `m ≠ 0`, `α > 0`, `β = π²/α`:
/// `α^{−m}{½ζ(2m+1) + Σ n^{−2m−1}/(e^{2αn}−1)}
///  = (−β)^{−m}{½ζ(2m+1) + Σ n^{−2m−1}/(e^{2βn}−1)} − Bernoulli block`.
pub fn ramanujan_check(m: i32, alpha: f64, tol: &Tolerance) -> Result<IdentityReport> {
    if m == 0 {
        return Err(domain("the odd-zeta transformation needs m != 0"));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(domain(alloc::format!("alpha must be positive, got {alpha}")));
    }
    if 2 * m.unsigned_abs() as usize + 2 > BERNOULLI_CAP {
        return Err(Error::Budget(alloc::format!("|m| = {} exceeds the Bernoulli cap", m.abs())));
    }
    let beta = PI * PI / alpha;
    let inner_tol = tol.tightened(10.0);
    let left = ramanujan_side(m, alpha, &inner_tol)?;
    let right = ramanujan_side(m, beta, &inner_tol)?;
    let lhs = left.value * libm::pow(alpha, -m as f64);
    let rhs = right.value * libm::pow(-beta, -m as f64) - ramanujan_bernoulli_block(m, alpha, beta);
    let report = IdentityReport::compare(
        IdentityId::Ramanujan,
        params(&[("m", real(m as f64)), ("alpha", real(alpha))]),
        lhs,
        rhs,
        tol,
    );
    Ok(report.with_costs(left.terms_used + right.terms_used, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(re: f64, im: f64, tol: f64) -> LambertParams {
        LambertParams::new(ComplexValue::new(re, im), Tolerance::relative(tol)).unwrap()
    }

    #[test]
    fn log_lambert_identity_on_a_grid() {
        for (re, im) in [(1.0, 0.0), (0.5, 0.0), (3.0, 2.0), (0.3, 0.2)] {
            let r = lambert_log_check(&lp(re, im, 1e-9)).unwrap();
            assert!(r.pass, "y = {re}+{im}i: rel {}", r.rel_err);
        }
    }

    #[test]
    fn alternative_form_on_a_grid() {
        for (re, im) in [(1.0, 0.0), (2.0, 1.0), (0.5, 0.0), (0.3, 0.2)] {
            let r = lambert_log_alt_check(&lp(re, im, 1e-8)).unwrap();
            assert!(r.pass, "y = {re}+{im}i: rel {}", r.rel_err);
        }
    }

    #[test]
    fn wigert_points() {
        for (re, im) in [(1.0, 0.0), (TAU, 0.0), (5.0, 3.0)] {
            let r = wigert_check(&lp(re, im, 1e-10)).unwrap();
            assert!(r.pass, "y = {re}+{im}i: rel {}", r.rel_err);
        }
    }

    #[test]
    fn ramanujan_points() {
        let tol = Tolerance::relative(1e-10);
        for (m, alpha) in [(1, PI), (2, PI / 2.0), (3, 1.3), (-1, 0.8), (-2, 2.0)] {
            let r = ramanujan_check(m, alpha, &tol).unwrap();
            assert!(r.pass, "m = {m}, alpha = {alpha}: rel {}", r.rel_err);
        }
        assert!(ramanujan_check(0, 1.0, &tol).is_err());
    }

    #[test]
    fn bernoulli_block_bookkeeping() {
        // m = 1: j = 0..2 with B0 B4, B2 B2, B4 B0
        let (a, b) = (1.5, PI * PI / 1.5);
        let b4 = -1.0 / 30.0;
        let expected = 4.0 * (b4 / 24.0 * a * a - (1.0 / 36.0) / 4.0 * a * b + b4 / 24.0 * b * b);
        assert!((ramanujan_bernoulli_block(1, a, b) - expected).abs() < 1e-14);
        assert_eq!(ramanujan_bernoulli_block(-3, a, b), 0.0);
    }

    #[test]
    fn divisor_form_points() {
        for y in [1.0, 2.0, 0.5] {
            assert!(divisor_form_check(&lp(y, 0.0, 1e-12)).unwrap().pass);
        }
    }
}
