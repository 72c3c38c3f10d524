//! Log-gamma, digamma and trigamma for complex arguments, plus double-word
//! reciprocal gamma.
//!
//! Arguments are shifted upward by the recurrences until `Re w >= 0` and
//! `|w| >= 20` (binary64) or `|w| >= 40` (double-word), where the Stirling
//! series is summed until its terms fall below rounding.

use crate::error::{domain, Result};
use crate::numerics::bernoulli::{bernoulli_extended, bernoulli_f64};
use crate::numerics::{ComplexValue, ExtendedComplex, ExtendedValue, NeumaierComplex};

use super::constants::extended_constants;

const SHIFT_RADIUS: f64 = 20.0;
const SHIFT_RADIUS_EXTENDED: f64 = 40.0;
const MAX_STIRLING_TERMS: usize = 30;

pub(crate) fn is_nonpositive_integer(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == libm::floor(z.re)
}

fn shift_count(z: ComplexValue, radius: f64) -> usize {
    let mut m = 0usize;
    let mut w = z;
    while w.re < 0.0 || w.norm() < radius {
        m += 1;
        w = z + m as f64;
    }
    m
}

fn check_pole(z: ComplexValue, name: &str) -> Result<()> {
    if is_nonpositive_integer(z) {
        return Err(domain(alloc::format!("{name} has a pole at {}", z.re)));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain(alloc::format!("{name} needs a finite argument")));
    }
    Ok(())
}

/// `ln Γ(z)` on the branch continuous from the positive axis
/// (sum of principal logarithms of the recurrence factors).
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    check_pole(z, "log_gamma")?;
    let m = shift_count(z, SHIFT_RADIUS);
    let w = z + m as f64;
    let lw = w.ln();
    let mut acc = NeumaierComplex::new();
    acc.add((w - 0.5) * lw);
    acc.add(-w);
    acc.add(ComplexValue::new(0.5 * libm::log(core::f64::consts::TAU), 0.0));
    let w2 = (w * w).inv();
    let mut wp = w.inv();
    for k in 1..=MAX_STIRLING_TERMS {
        let kk = 2.0 * k as f64;
        let t = wp * (bernoulli_f64(2 * k) / (kk * (kk - 1.0)));
        acc.add(t);
        if t.norm() < 1e-17 * acc.value().norm() {
            break;
        }
        wp *= w2;
    }
    for j in 0..m {
        acc.add(-(z + j as f64).ln());
    }
    Ok(acc.value())
}

/// `1/Γ(z)`, entire; exactly zero at the poles of Γ.
pub fn rgamma(z: ComplexValue) -> ComplexValue {
    if is_nonpositive_integer(z) {
        return ComplexValue::new(0.0, 0.0);
    }
    log_gamma(z).map_or(ComplexValue::new(0.0, 0.0), |l| (-l).exp())
}

/// `ψ(z) = Γ'(z)/Γ(z)`.
pub fn digamma(z: ComplexValue) -> Result<ComplexValue> {
    check_pole(z, "digamma")?;
    let m = shift_count(z, SHIFT_RADIUS);
    let w = z + m as f64;
    let mut acc = NeumaierComplex::new();
    acc.add(w.ln());
    acc.add(-(w * 2.0).inv());
    let w2 = (w * w).inv();
    let mut wp = w2;
    for k in 1..=MAX_STIRLING_TERMS {
        let t = -wp * (bernoulli_f64(2 * k) / (2.0 * k as f64));
        acc.add(t);
        if t.norm() < 1e-17 * acc.value().norm() {
            break;
        }
        wp *= w2;
    }
    for j in 0..m {
        acc.add(-(z + j as f64).inv());
    }
    Ok(acc.value())
}

/// `ψ'(z)`.
pub fn trigamma(z: ComplexValue) -> Result<ComplexValue> {
    check_pole(z, "trigamma")?;
    let m = shift_count(z, SHIFT_RADIUS);
    let w = z + m as f64;
    let wi = w.inv();
    let mut acc = NeumaierComplex::new();
    acc.add(wi);
    acc.add(wi * wi * 0.5);
    let w2 = wi * wi;
    let mut wp = w2 * wi;
    for k in 1..=MAX_STIRLING_TERMS {
        let t = wp * bernoulli_f64(2 * k);
        acc.add(t);
        if t.norm() < 1e-17 * acc.value().norm() {
            break;
        }
        wp *= w2;
    }
    for j in 0..m {
        let r = (z + j as f64).inv();
        acc.add(r * r);
    }
    Ok(acc.value())
}

/// `1/Γ(z)` in double-word, exact zero at the poles of Γ.
pub fn rgamma_extended(z: ExtendedComplex) -> Result<ExtendedComplex> {
    let zf = z.to_complex();
    if is_nonpositive_integer(zf) && z.re.lo == 0.0 && z.im.lo == 0.0 {
        return Ok(ExtendedComplex::ZERO);
    }
    let m = shift_count(zf, SHIFT_RADIUS_EXTENDED);
    let mut product = ExtendedComplex::ONE;
    for j in 0..m {
        product *= z + ExtendedComplex::real(ExtendedValue::new(j as f64));
    }
    let w = z + ExtendedComplex::real(ExtendedValue::new(m as f64));
    let lw = w.ln()?;
    let half = ExtendedComplex::real(ExtendedValue::new(0.5));
    let mut lg = (w - half) * lw - w + ExtendedComplex::real(extended_constants().half_ln_tau);
    let wi = w.recip();
    let w2 = wi * wi;
    let mut wp = wi;
    for k in 1..=MAX_STIRLING_TERMS {
        let kk = 2.0 * k as f64;
        let t = wp.scale(bernoulli_extended(2 * k) / ExtendedValue::new(kk * (kk - 1.0)));
        lg += t;
        if t.norm_f64() < 1e-34 * lg.norm_f64().max(1.0) {
            break;
        }
        wp *= w2;
    }
    Ok(product * (-lg).exp()?)
}
