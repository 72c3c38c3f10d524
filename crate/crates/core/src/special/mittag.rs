//! `₁F₂`, the two-parameter Mittag-Leffler function with `α = 2`, and its
//! second `β`-derivative at `β = 1`.

use crate::error::{domain, Error, Result};
use crate::numerics::{
    integrate_oscillatory, ComplexValue, ExtendedComplex, ExtendedValue, NeumaierComplex, Oscillator, Tolerance,
};

use super::constants::euler_gamma;
use super::gamma::rgamma_extended;

const MAX_TERMS: usize = 2000;

fn is_pole(p: ComplexValue) -> bool {
    p.im == 0.0 && p.re <= 0.0 && p.re == libm::round(p.re)
}

/// `₁F₂(a; b, c; z) = Σ (a)ₙ/((b)ₙ(c)ₙ) zⁿ/n!`, summed in double-word.
///
/// Stops after three consecutive terms below `tol` against the running sum
/// once the terms have started to decrease.
pub fn hyp1f2(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
    tol: &Tolerance,
) -> Result<ExtendedComplex> {
    if is_pole(b) || is_pole(c) {
        return Err(domain(alloc::format!("1F2 lower parameters must avoid 0, -1, -2, ...; got {b}, {c}")));
    }
    let (a, b, c, z) =
        (ExtendedComplex::from(a), ExtendedComplex::from(b), ExtendedComplex::from(c), ExtendedComplex::from(z));
    let mut term = ExtendedComplex::ONE;
    let mut acc = ExtendedComplex::ONE;
    let mut prev = 1.0;
    let mut quiet = 0;
    let budget = tol.max_terms.min(MAX_TERMS);
    for n in 0..budget {
        let nn = ExtendedComplex::real(ExtendedValue::new(n as f64));
        let num = (a + nn) * z;
        let den = (b + nn) * (c + nn) * ExtendedComplex::real(ExtendedValue::new((n + 1) as f64));
        term = term * num * den.recip();
        if term.norm_f64() == 0.0 {
            // a is a non-positive integer: the series terminates
            return Ok(acc);
        }
        acc += term;
        let m = term.norm_f64();
        if m < prev && tol.accepts(m, acc.norm_f64()) {
            quiet += 1;
            if quiet == 3 {
                return Ok(acc);
            }
        } else {
            quiet = 0;
        }
        prev = m;
    }
    Err(Error::NoConvergence { terms: budget, partial: acc.to_complex() })
}

/// `E₂,b(z) = Σ zᵏ/Γ(2k + b)` for real `b > 0`.
pub fn mittag_leffler_e2b(z: ComplexValue, b: f64) -> Result<ComplexValue> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(domain(alloc::format!("E_2,b needs b > 0, got {b}")));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain("E_2,b needs a finite argument"));
    }
    // 1/Γ(b) once, then 1/Γ(2k+b+2) = 1/(Γ(2k+b)(2k+b)(2k+b+1))
    let mut term = rgamma_extended(ExtendedComplex::real(ExtendedValue::new(b)))?.to_complex();
    let mut acc = NeumaierComplex::new();
    acc.add(term);
    let mut prev = term.norm();
    let mut quiet = 0;
    for k in 0..MAX_TERMS {
        let x = 2.0 * k as f64 + b;
        term = term * z / (x * (x + 1.0));
        acc.add(term);
        let m = term.norm();
        if m == 0.0 || (m < prev && m <= 1e-17 * acc.value().norm()) {
            quiet += 1;
            if quiet == 3 {
                return Ok(acc.value());
            }
        } else {
            quiet = 0;
        }
        prev = m;
    }
    Err(Error::NoConvergence { terms: MAX_TERMS, partial: acc.value() })
}

/// Evaluation route for [`ml_d2b_at1`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum D2bMode {
    /// `Σ (ψ²(2k+1) − ψ′(2k+1)) w^{2k}/(2k)!`.
    Series,
    /// `log²(w) cosh(w) + 2 ∫₀^∞ u cos(u) log(u)/(u² + w²) du`, `Re w > 0`.
    Integral(Tolerance),
}

/// `∂²/∂b² E₂,b(w²)` at `b = 1`.
pub fn ml_d2b_at1(w: ComplexValue, mode: D2bMode) -> Result<ComplexValue> {
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(domain("the b-derivative needs a finite argument"));
    }
    match mode {
        D2bMode::Series => d2b_series(w),
        D2bMode::Integral(tol) => d2b_integral(w, &tol),
    }
}

fn d2b_series(w: ComplexValue) -> Result<ComplexValue> {
    use core::f64::consts::PI;
    let w2 = w * w;
    let gamma = euler_gamma();
    // ψ(2k+1) = −γ + H_{2k}, ψ′(2k+1) = π²/6 − Σ_{j≤2k} 1/j²
    let mut harmonic = 0.0;
    let mut harmonic2 = 0.0;
    let mut power = ComplexValue::new(1.0, 0.0); // w^{2k}/(2k)!
    let mut acc = NeumaierComplex::new();
    let mut quiet = 0;
    for k in 0..MAX_TERMS {
        if k > 0 {
            let (j1, j2) = ((2 * k - 1) as f64, (2 * k) as f64);
            harmonic += 1.0 / j1 + 1.0 / j2;
            harmonic2 += 1.0 / (j1 * j1) + 1.0 / (j2 * j2);
            power = power * w2 / (j1 * j2);
        }
        let psi = harmonic - gamma;
        let psi_prime = PI * PI / 6.0 - harmonic2;
        let t = power * (psi * psi - psi_prime);
        acc.add(t);
        if k > 0 && t.norm() <= 1e-17 * acc.value().norm() {
            quiet += 1;
            if quiet == 3 {
                return Ok(acc.value());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NoConvergence { terms: MAX_TERMS, partial: acc.value() })
}

fn d2b_integral(w: ComplexValue, tol: &Tolerance) -> Result<ComplexValue> {
    if !(w.re > 0.0) {
        return Err(domain(alloc::format!("the integral form needs Re w > 0, got {w}")));
    }
    let w2 = w * w;
    let r = integrate_oscillatory(
        |u| {
            if u == 0.0 {
                return ComplexValue::new(0.0, 0.0);
            }
            (ComplexValue::new(u * u, 0.0) + w2).inv() * (u * libm::log(u))
        },
        Oscillator::Cos,
        tol,
    )?;
    if !r.converged {
        return Err(Error::Quadrature { value: r.value, err_estimate: r.err_estimate });
    }
    let l = w.ln();
    Ok(l * l * w.cosh() + r.value * 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn tight() -> Tolerance {
        Tolerance::uniform(1e-15)
    }

    #[test]
    fn hyp1f2_special_cases() {
        let one = c(1.0, 0.0);
        let v = hyp1f2(one, c(0.5, 0.0), one, c(0.0, 0.0), &tight()).unwrap();
        assert_eq!(v.to_complex(), one);
        // ₁F₂(1; ½, 1; w²/4) = cosh w
        let v = hyp1f2(one, c(0.5, 0.0), one, c(1.0, 0.0), &tight()).unwrap();
        assert!((v.to_complex().re - libm::cosh(2.0)).abs() < 1e-15 * libm::cosh(2.0));
        // a = b collapses to ₀F₁(; 2; 1) = Σ 1/((k+1)! k!)
        let v = hyp1f2(c(0.7, 0.0), c(0.7, 0.0), c(2.0, 0.0), one, &tight()).unwrap();
        let mut direct = 0.0;
        let mut t = 1.0;
        for k in 0..30 {
            direct += t;
            t /= ((k + 1) * (k + 2)) as f64;
        }
        assert!((v.to_complex().re - direct).abs() < 1e-15);
    }

    #[test]
    fn hyp1f2_rejects_poles_and_terminates_on_negative_integer_a() {
        assert!(hyp1f2(c(1.0, 0.0), c(-2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), &tight()).is_err());
        // (−2)ₙ kills every term past n = 2
        let v = hyp1f2(c(-2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(3.0, 0.0), &tight()).unwrap();
        assert!((v.to_complex().re - (1.0 - 6.0 + 9.0 / 4.0)).abs() < 1e-15);
    }

    #[test]
    fn mittag_leffler_closed_forms() {
        let e = mittag_leffler_e2b(c(9.0, 0.0), 1.0).unwrap();
        assert!((e.re - libm::cosh(3.0)).abs() < 1e-14 * libm::cosh(3.0));
        let e = mittag_leffler_e2b(c(4.0, 0.0), 2.0).unwrap();
        assert!((e.re - libm::sinh(2.0) / 2.0).abs() < 1e-15 * libm::sinh(2.0));
        assert_eq!(mittag_leffler_e2b(c(0.0, 0.0), 1.0).unwrap(), c(1.0, 0.0));
        let w = c(0.3, 1.1);
        let e = mittag_leffler_e2b(w * w, 1.0).unwrap();
        assert!((e - w.cosh()).norm() < 1e-15);
        assert!(mittag_leffler_e2b(c(1.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn d2b_limit_at_zero() {
        let v = ml_d2b_at1(c(0.0, 0.0), D2bMode::Series).unwrap();
        let g = euler_gamma();
        let expected = g * g - core::f64::consts::PI * core::f64::consts::PI / 6.0;
        assert!((v.re - expected).abs() < 1e-15);
    }

    #[test]
    fn d2b_series_is_even() {
        let w = c(1.3, 0.4);
        let a = ml_d2b_at1(w, D2bMode::Series).unwrap();
        let b = ml_d2b_at1(-w, D2bMode::Series).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn d2b_series_matches_finite_difference() {
        let w = c(1.0, 0.0);
        let h = 1e-3;
        let e = |b: f64| mittag_leffler_e2b(w * w, b).unwrap();
        let fd = (e(1.0 + h) - e(1.0) * 2.0 + e(1.0 - h)) / (h * h);
        let v = ml_d2b_at1(w, D2bMode::Series).unwrap();
        assert!((v - fd).norm() < 1e-5, "{v} vs {fd}");
    }

    #[test]
    fn d2b_modes_agree() {
        let tol = Tolerance::uniform(1e-11);
        for w in [c(0.5, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.5)] {
            let s = ml_d2b_at1(w, D2bMode::Series).unwrap();
            let i = ml_d2b_at1(w, D2bMode::Integral(tol)).unwrap();
            assert!((s - i).norm() < 1e-9, "{w}: {s} vs {i}");
        }
        assert!(ml_d2b_at1(c(-1.0, 0.0), D2bMode::Integral(tol)).is_err());
    }
}
