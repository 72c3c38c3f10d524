//! The two bracket series of the log-Lambert transform, in `u = 2πn/y`:
//!
//! * digamma bracket `Σ {log u − ½(ψ(iu) + ψ(−iu))}`,
//! * ψ₁ bracket `Σ {ψ₁(iu) + ψ₁(−iu) − ½(log²(iu) + log²(−iu)) + y/(4n)}`.
//!
//! Both summands are `O(n^{−2})` (times `log n`), so direct summation is
//! hopeless at `1e-10`. Terms are summed directly while `|u| < 20` or
//! `Re u < 6`; from there on each summand is replaced by its large-`u`
//! expansion, in which `n` enters only through `n^{−2k}` and
//! `n^{−2k} log n`, so the tail collapses onto `Σ_{n≥N} n^{−2k}` and
//! `Σ_{n≥N} n^{−2k} log n`. With `|u_N| >= 20` the expansion error is far
//! below rounding.

use core::f64::consts::TAU;

use crate::error::{domain, Error, Result};
use crate::numerics::bernoulli::bernoulli_f64;
use crate::numerics::{ComplexValue, NeumaierComplex, BERNOULLI_CAP};
use crate::special::{digamma, psi1, zeta_tail};

use super::LambertParams;

const TAIL_RADIUS: f64 = 20.0;
const TAIL_MIN_REAL: f64 = 6.0;

/// A bracket series split into its direct part and its closed-form tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BracketSum {
    pub value: ComplexValue,
    /// Summands evaluated one by one (`n < N`).
    pub direct_terms: usize,
    /// Expansion orders used for the tail.
    pub tail_terms: usize,
}

impl BracketSum {
    pub fn terms(&self) -> usize {
        self.direct_terms + self.tail_terms
    }
}

/// First `n` from which the tail expansion is used.
pub fn tail_start(y: ComplexValue) -> usize {
    let r = y.norm();
    let by_radius = TAIL_RADIUS * r / TAU;
    let by_real = TAIL_MIN_REAL * r * r / (TAU * y.re);
    (libm::ceil(by_radius.max(by_real)) as usize).max(1)
}

fn u_of(n: usize, y: ComplexValue) -> ComplexValue {
    ComplexValue::new(TAU * n as f64, 0.0) / y
}

fn iu(u: ComplexValue) -> ComplexValue {
    ComplexValue::new(-u.im, u.re)
}

/// `log u − ½(ψ(iu) + ψ(−iu))` at `u = 2πn/y`.
pub fn digamma_bracket_term(n: usize, y: ComplexValue) -> Result<ComplexValue> {
    let u = u_of(n, y);
    let x = iu(u);
    Ok(u.ln() - (digamma(x)? + digamma(-x)?) * 0.5)
}

/// `ψ₁(iu) + ψ₁(−iu) − ½(log²(iu) + log²(−iu)) + y/(4n)` at `u = 2πn/y`.
pub fn psi1_bracket_term(n: usize, y: ComplexValue) -> Result<ComplexValue> {
    let u = u_of(n, y);
    let x = iu(u);
    let (lp, lm) = (x.ln(), (-x).ln());
    Ok(psi1(x)? + psi1(-x)? - (lp * lp + lm * lm) * 0.5 + y / (4.0 * n as f64))
}

fn check(p: &LambertParams) -> Result<usize> {
    let n_tail = tail_start(p.y);
    if n_tail > p.tol.max_terms {
        return Err(Error::Budget(alloc::format!(
            "bracket series needs {n_tail} direct terms at y = {}, budget {}",
            p.y,
            p.tol.max_terms
        )));
    }
    if !(p.y.re > 0.0) {
        return Err(domain("bracket series need Re y > 0"));
    }
    Ok(n_tail)
}

/// `H_{2k−2} + 1/(2k−1)`.
fn expansion_weight(k: usize) -> f64 {
    let mut h = 0.0;
    for j in (1..=2 * k - 2).rev() {
        h += 1.0 / j as f64;
    }
    h + 1.0 / (2 * k - 1) as f64
}

/// Sums `coeff(k)` for `k = 1, 2, …` until the terms stop resolving or grow.
fn sum_tail<F>(mut coeff: F) -> Result<(ComplexValue, usize)>
where
    F: FnMut(usize) -> Result<ComplexValue>,
{
    let mut acc = NeumaierComplex::new();
    let mut prev = f64::INFINITY;
    for k in 1..=BERNOULLI_CAP / 2 {
        let t = coeff(k)?;
        let m = t.norm();
        if m > prev {
            return Ok((acc.value(), k - 1));
        }
        acc.add(t);
        if m <= 1e-18 * acc.value().norm() || m == 0.0 {
            return Ok((acc.value(), k));
        }
        prev = m;
    }
    Ok((acc.value(), BERNOULLI_CAP / 2))
}

/// `Σ_{n≥1} {log u − ½(ψ(iu) + ψ(−iu))}`, `u = 2πn/y`.
pub fn digamma_bracket_sum(p: &LambertParams) -> Result<BracketSum> {
    let n_tail = check(p)?;
    let mut acc = NeumaierComplex::new();
    for n in 1..n_tail {
        acc.add(digamma_bracket_term(n, p.y)?);
    }
    // summand ~ Σ_k B_{2k}/(2k) (iu)^{−2k} = Σ_k B_{2k}/(2k) (−1)^k (y/2π)^{2k} n^{−2k}
    let r2 = (p.y / TAU) * (p.y / TAU);
    let mut power = ComplexValue::new(1.0, 0.0);
    let (tail, used) = sum_tail(|k| {
        power *= -r2;
        let (z, _) = zeta_tail(ComplexValue::new(2.0 * k as f64, 0.0), n_tail)?;
        Ok(power * z * (bernoulli_f64(2 * k) / (2 * k) as f64))
    })?;
    acc.add(tail);
    Ok(BracketSum { value: acc.value(), direct_terms: n_tail - 1, tail_terms: used })
}

/// `Σ_{n≥1} {ψ₁(iu) + ψ₁(−iu) − ½(log²(iu) + log²(−iu)) + y/(4n)}`.
pub fn psi1_bracket_sum(p: &LambertParams) -> Result<BracketSum> {
    let n_tail = check(p)?;
    let mut acc = NeumaierComplex::new();
    for n in 1..n_tail {
        acc.add(psi1_bracket_term(n, p.y)?);
    }
    // summand ~ Σ_k B_{2k}/k (−1)^k (y/2π)^{2k} n^{−2k} (c_k − log(2π/y) − log n)
    let r2 = (p.y / TAU) * (p.y / TAU);
    let log_scale = (ComplexValue::new(TAU, 0.0) / p.y).ln();
    let mut power = ComplexValue::new(1.0, 0.0);
    let (tail, used) = sum_tail(|k| {
        power *= -r2;
        let (z, zl) = zeta_tail(ComplexValue::new(2.0 * k as f64, 0.0), n_tail)?;
        let inner = (ComplexValue::new(expansion_weight(k), 0.0) - log_scale) * z - zl;
        Ok(power * inner * (bernoulli_f64(2 * k) / k as f64))
    })?;
    acc.add(tail);
    Ok(BracketSum { value: acc.value(), direct_terms: n_tail - 1, tail_terms: used })
}
