//! Riemann ζ and ζ′ for complex arguments, and tail sums `Σ_{n≥N} n^{-s}`.
//!
//! For `Re s >= 0`: Euler–Maclaurin with `N = max(16, ⌈|s|⌉)` direct terms
//! and up to 30 Bernoulli corrections; ζ′ comes from the same sum
//! differentiated term by term. For `Re s < 0` the functional equation maps
//! to `1 − s`.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use super::gamma::{digamma, log_gamma};
use crate::error::{domain, Result};
use crate::numerics::bernoulli::{bernoulli_extended, bernoulli_f64};
use crate::numerics::{ComplexValue, ExtendedValue, NeumaierComplex};

const MIN_CUTOFF: usize = 16;
const MAX_CORRECTIONS: usize = 30;

fn cutoff(s: ComplexValue) -> usize {
    MIN_CUTOFF.max(libm::ceil(s.norm()) as usize)
}

/// `(Σ_{n≥N} n^{-s}, d/ds of it)` by Euler–Maclaurin at `N`.
///
/// Valid as an analytic continuation for every `s ≠ 1`; accurate when
/// `N >= max(16, |s|)`.
fn em_tail(s: ComplexValue, n: usize) -> (ComplexValue, ComplexValue) {
    let nf = n as f64;
    let ln_n = libm::log(nf);
    let n_pow = (-s * ln_n).exp(); // N^{-s}
    let sm1 = s - 1.0;
    let a = n_pow * nf / sm1;
    let mut value = NeumaierComplex::new();
    let mut deriv = NeumaierComplex::new();
    value.add(a);
    deriv.add(a * (-ln_n - sm1.inv()));
    value.add(n_pow * 0.5);
    deriv.add(n_pow * (-0.5 * ln_n));
    // rising factorial (s)_{2k-1} and its s-derivative
    let mut p = s;
    let mut dp = ComplexValue::new(1.0, 0.0);
    let mut scale = n_pow / nf; // N^{-s-2k+1} at k = 1
    let inv_n2 = 1.0 / (nf * nf);
    let mut fact = 2.0; // (2k)!
    for k in 1..=MAX_CORRECTIONS {
        let c = bernoulli_f64(2 * k) / fact;
        let t = p * scale * c;
        let dt = (dp - p * ln_n) * scale * c;
        value.add(t);
        deriv.add(dt);
        let small = |x: ComplexValue, acc: &NeumaierComplex| x.norm() <= 1e-17 * acc.value().norm();
        if small(t, &value) && small(dt, &deriv) {
            break;
        }
        let kk = 2.0 * k as f64;
        let f1 = s + (kk - 1.0);
        let f2 = s + kk;
        dp = dp * f1 * f2 + p * (f1 + f2);
        p = p * f1 * f2;
        scale *= inv_n2;
        fact *= (kk + 1.0) * (kk + 2.0);
    }
    (value.value(), deriv.value())
}

/// Direct partial sums `(Σ_{n=from}^{to-1} n^{-s}, −Σ ln n · n^{-s})`.
fn direct(s: ComplexValue, from: usize, to: usize) -> (NeumaierComplex, NeumaierComplex) {
    let mut value = NeumaierComplex::new();
    let mut deriv = NeumaierComplex::new();
    for n in from.max(1)..to {
        let ln_n = libm::log(n as f64);
        let t = (-s * ln_n).exp();
        value.add(t);
        deriv.add(-t * ln_n);
    }
    (value, deriv)
}

fn em_zeta_pair(s: ComplexValue) -> (ComplexValue, ComplexValue) {
    let n = cutoff(s);
    let (mut value, mut deriv) = direct(s, 1, n);
    let (t, dt) = em_tail(s, n);
    value.add(t);
    deriv.add(dt);
    (value.value(), deriv.value())
}

/// `(sin(πs/2), cos(πs/2))`, exact at real integers.
fn half_pi_sin_cos(s: ComplexValue) -> (ComplexValue, ComplexValue) {
    if s.im == 0.0 && s.re == libm::floor(s.re) && s.re.abs() < 1e15 {
        let table = [(0.0, 1.0), (1.0, 0.0), (0.0, -1.0), (-1.0, 0.0)];
        let (sn, cs) = table[(s.re as i64).rem_euclid(4) as usize];
        return (ComplexValue::new(sn, 0.0), ComplexValue::new(cs, 0.0));
    }
    let x = s * core::f64::consts::FRAC_PI_2;
    (x.sin(), x.cos())
}

/// `(ζ(s), ζ′(s))` from one pass.
pub fn zeta_pair(s: ComplexValue) -> Result<(ComplexValue, ComplexValue)> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(domain("zeta needs a finite argument"));
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(domain("zeta has a pole at s = 1"));
    }
    if s.re >= 0.0 {
        return Ok(em_zeta_pair(s));
    }
    // ζ(s) = χ(s) ζ(1−s),  χ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s)
    let one_minus = ComplexValue::new(1.0, 0.0) - s;
    let (z1, dz1) = em_zeta_pair(one_minus);
    let (sn, cs) = half_pi_sin_cos(s);
    let ln_tau = libm::log(core::f64::consts::TAU);
    let ln_pi = libm::log(core::f64::consts::PI);
    let base = (s * ln_tau - ln_pi + log_gamma(one_minus)?).exp(); // 2^s π^{s−1} Γ(1−s)
    let chi = base * sn;
    let dchi = base * (sn * (ln_tau - digamma(one_minus)?) + cs * core::f64::consts::FRAC_PI_2);
    Ok((chi * z1, dchi * z1 - chi * dz1))
}

pub fn zeta(s: ComplexValue) -> Result<ComplexValue> {
    zeta_pair(s).map(|p| p.0)
}

pub fn zeta_prime(s: ComplexValue) -> Result<ComplexValue> {
    zeta_pair(s).map(|p| p.1)
}

/// `(Σ_{n≥n0} n^{-s}, Σ_{n≥n0} ln n · n^{-s})` for `Re s > 1`.
pub fn zeta_tail(s: ComplexValue, n0: usize) -> Result<(ComplexValue, ComplexValue)> {
    if !(s.re > 1.0) {
        return Err(domain(format!("tail sums need Re s > 1, got {s}")));
    }
    let n0 = n0.max(1);
    let start = n0.max(cutoff(s));
    let (mut value, mut deriv) = direct(s, n0, start);
    let (t, dt) = em_tail(s, start);
    value.add(t);
    deriv.add(dt);
    Ok((value.value(), -deriv.value()))
}

/// Largest `k` served by [`zeta_prime_even`].
pub const ZETA_PRIME_EVEN_CAP: usize = 32;

static ZETA_PRIME_EVEN: OnceBox<Vec<ExtendedValue>> = OnceBox::new();

/// `ζ′(s)` at real `s > 1` in double-word, by Euler–Maclaurin at `N = 20`.
fn zeta_prime_real_extended(s: f64) -> ExtendedValue {
    const N: usize = 20;
    let neg_s = ExtendedValue::new(-s);
    let mut acc = ExtendedValue::ZERO;
    for n in 2..N {
        let ln_n = ExtendedValue::new(n as f64).ln().unwrap_or(ExtendedValue::ZERO);
        let t = (neg_s * ln_n).exp().unwrap_or(ExtendedValue::ZERO);
        acc -= t * ln_n;
    }
    let nf = ExtendedValue::new(N as f64);
    let ln_n = nf.ln().unwrap_or(ExtendedValue::ZERO);
    let n_pow = (neg_s * ln_n).exp().unwrap_or(ExtendedValue::ZERO);
    let sm1 = ExtendedValue::new(s - 1.0);
    let a = n_pow * nf / sm1;
    acc += a * (-ln_n - sm1.recip());
    acc -= n_pow * ln_n.mul_f64(0.5);
    let mut p = ExtendedValue::new(s);
    let mut dp = ExtendedValue::ONE;
    let mut scale = n_pow / nf;
    let inv_n2 = (nf * nf).recip();
    let mut fact = ExtendedValue::new(2.0);
    for k in 1..=MAX_CORRECTIONS {
        let c = bernoulli_extended(2 * k) / fact;
        let dt = (dp - p * ln_n) * scale * c;
        acc += dt;
        if dt.to_f64().abs() < 1e-36 {
            break;
        }
        let kk = 2.0 * k as f64;
        let f1 = ExtendedValue::new(s + kk - 1.0);
        let f2 = ExtendedValue::new(s + kk);
        dp = dp * f1 * f2 + p * (f1 + f2);
        p = p * f1 * f2;
        scale *= inv_n2;
        fact = fact.mul_f64((kk + 1.0) * (kk + 2.0));
    }
    acc
}

fn zeta_prime_even_table() -> &'static [ExtendedValue] {
    ZETA_PRIME_EVEN
        .get_or_init(|| Box::new((1..=ZETA_PRIME_EVEN_CAP).map(|k| zeta_prime_real_extended(2.0 * k as f64)).collect()))
}

/// `ζ′(2k)` in double-word for `1 <= k <= 32`.
pub fn zeta_prime_even_extended(k: usize) -> Result<ExtendedValue> {
    if k == 0 || k > ZETA_PRIME_EVEN_CAP {
        return Err(domain(format!("zeta_prime_even needs 1 <= k <= {ZETA_PRIME_EVEN_CAP}, got {k}")));
    }
    Ok(zeta_prime_even_table()[k - 1])
}

/// `ζ′(2k) = −Σ ln n / n^{2k}` for `1 <= k <= 32`.
pub fn zeta_prime_even(k: usize) -> Result<f64> {
    zeta_prime_even_extended(k).map(ExtendedValue::to_f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn near(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn classical_values() {
        assert!(near(zeta(c(2.0, 0.0)).unwrap(), c(PI * PI / 6.0, 0.0), 1e-15));
        assert!(near(zeta(c(0.0, 0.0)).unwrap(), c(-0.5, 0.0), 1e-15));
        assert!(near(zeta_prime(c(0.0, 0.0)).unwrap(), c(-0.5 * libm::log(2.0 * PI), 0.0), 5e-15));
        assert!(near(zeta(c(-1.0, 0.0)).unwrap(), c(-1.0 / 12.0, 0.0), 1e-15));
        assert_eq!(zeta(c(-2.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!(zeta(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn reference_values_off_the_axis() {
        // 30-digit references
        assert!(near(zeta(c(0.5, 10.0)).unwrap(), c(1.544_895_220_296_752_8, -0.115_336_465_271_273_38), 1e-14));
        assert!(near(
            zeta_prime(c(0.5, 10.0)).unwrap(),
            c(-0.360_907_373_091_571_8, -0.003_593_440_735_631_065_6),
            1e-14
        ));
        assert!(near(zeta(c(0.5, 100.0)).unwrap(), c(2.692_619_885_681_324, -0.020_386_029_602_598_16), 1e-13));
        assert!(near(zeta_prime(c(-1.0, 0.0)).unwrap(), c(-0.165_421_143_700_450_93, 0.0), 1e-15));
        assert!(near(zeta(c(-2.5, 3.0)).unwrap(), c(0.068_763_679_033_646_48, 0.133_980_283_937_834_43), 1e-13));
    }

    #[test]
    fn first_zero() {
        let v = zeta(c(0.5, 14.134_725)).unwrap();
        assert!(v.norm() < 1e-5);
    }

    #[test]
    fn zeta_prime_even_values() {
        let v = zeta_prime_even(1).unwrap();
        assert!((v + 0.937_548_254_315_843_75).abs() < 1e-15);
        for k in 1..=ZETA_PRIME_EVEN_CAP {
            assert!(zeta_prime_even(k).unwrap() < 0.0);
        }
        let ratio = zeta_prime_even(10).unwrap() / (-libm::log(2.0) * libm::pow(2.0, -20.0));
        assert!((ratio - 1.0).abs() < 0.05);
        assert!(zeta_prime_even(0).is_err());
        assert!(zeta_prime_even(33).is_err());
    }

    #[test]
    fn tail_sums_match_zeta_minus_partial() {
        let s = c(2.5, 1.0);
        let (z, dz) = zeta_pair(s).unwrap();
        let (t, lt) = zeta_tail(s, 7).unwrap();
        let (p, dp) = direct(s, 1, 7);
        assert!(near(t + p.value(), z, 1e-14));
        assert!(near(-lt + dp.value(), dz, 1e-14));
    }
}
