//! Exponential integrals `Ei`, `E1`, the hyperbolic integrals `Shi`, `Chi`
//! and the kernel `K(w) = sinh(w) Shi(w) − cosh(w) Chi(w)`, which equals
//! `∫₀^∞ t cos t /(t² + w²) dt` for `Re w > 0`.
//!
//! `K` cancels catastrophically when built from its definition: the two
//! products grow like `e^{2 Re w}` while `K(w) ≈ −1/w²`. Real arguments use
//! `K(w) = ½(e^w E1(w) − e^{−w} Ei(w))`, where both scaled pieces are
//! evaluated without forming large exponentials. Complex arguments use
//! double-word Taylor series up to `|w| = 25`; beyond, the continued fraction
//! for `e^u E1(u)` at `u = ±w`; near the positive axis, where the fraction
//! for `u = −w` stalls, the real formula continued analytically, and the
//! odd-factorial expansion once `e^{−|w|}` is negligible.

use crate::error::{domain, Error, Result};
use crate::numerics::{ComplexValue, ExtendedComplex, ExtendedValue, NeumaierComplex};

use super::constants::{euler_gamma, extended_constants};

/// Largest `|z|` accepted by the binary64 Taylor series of [`shi_chi`].
pub const SHI_CHI_RADIUS: f64 = 40.0;
/// Crossover from double-word Taylor to the large-`|w|` forms in [`sinhshi_minus_coshchi`].
pub const KERNEL_DIRECT_RADIUS: f64 = 25.0;
/// Half-angle about the positive axis where the kernel uses its expansion.
const KERNEL_AXIS_ANGLE: f64 = 0.3;
/// Within the axis sector, `Ei` is summed by its power series up to this `|w|`.
const KERNEL_AXIS_SERIES_RADIUS: f64 = 60.0;
/// Positive-axis crossover from the `Ei` power series to its expansion.
const EI_SERIES_LIMIT: f64 = 40.0;
const MAX_SERIES_TERMS: usize = 500;
const MAX_FRACTION_TERMS: usize = 5000;

fn c(re: f64) -> ComplexValue {
    ComplexValue::new(re, 0.0)
}

/// `Σ_{k≥1} x^k/(k·k!)` for complex `x`.
fn ein_tail(x: ComplexValue) -> ComplexValue {
    let mut acc = NeumaierComplex::new();
    let mut p = ComplexValue::new(1.0, 0.0);
    let mut quiet = 0;
    for k in 1..MAX_SERIES_TERMS {
        p = p * x / k as f64;
        let t = p / k as f64;
        acc.add(t);
        if t.norm() <= 1e-17 * acc.value().norm() {
            quiet += 1;
            if quiet == 3 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    acc.value()
}

/// `e^u E1(u)` by the modified Lentz continued fraction
/// `1/(u + 1 − 1²/(u + 3 − 2²/(u + 5 − …)))`; `u` off the negative axis.
fn scaled_e1_fraction(u: ComplexValue) -> Result<ComplexValue> {
    const TINY: f64 = 1e-300;
    let mut b = u + 1.0;
    let mut cc = ComplexValue::new(1.0 / TINY, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..MAX_FRACTION_TERMS {
        let an = -((i * i) as f64);
        b += 2.0;
        d = (d * an + b).inv();
        cc = b + c(an) / cc;
        let del = cc * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            return Ok(h);
        }
    }
    Err(Error::NoConvergence { terms: MAX_FRACTION_TERMS, partial: h })
}

/// `e^u E1(u)` for complex `u` off the non-positive real axis.
pub fn scaled_e1(u: ComplexValue) -> Result<ComplexValue> {
    if !(u.re.is_finite() && u.im.is_finite()) || (u.im == 0.0 && u.re <= 0.0) {
        return Err(domain(alloc::format!("E1 needs an argument off the non-positive real axis, got {u}")));
    }
    if u.norm() <= 2.0 {
        // E1(u) = −γ − log u − Σ (−u)^k/(k·k!)
        let e1 = -c(euler_gamma()) - u.ln() - ein_tail(-u);
        return Ok(e1 * u.exp());
    }
    scaled_e1_fraction(u)
}

/// `E1(x) = ∫_x^∞ e^{−t}/t dt` for `x > 0`.
pub fn exp_integral_e1(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(alloc::format!("E1 needs a finite positive argument, got {x}")));
    }
    Ok(scaled_e1(c(x))?.re * libm::exp(-x))
}

/// `e^{−x} Ei(x)` for `x > 0`, without overflow.
fn scaled_ei_positive(x: f64) -> f64 {
    if x <= EI_SERIES_LIMIT {
        let tail = ein_tail(c(x)).re;
        return (euler_gamma() + libm::log(x) + tail) * libm::exp(-x);
    }
    // e^{−x} Ei(x) ~ Σ k!/x^{k+1}, cut at the smallest term
    let mut acc = 0.0;
    let mut t = 1.0 / x;
    let mut k = 0.0;
    loop {
        acc += t;
        k += 1.0;
        let next = t * k / x;
        if next >= t || next < 1e-18 * acc {
            break;
        }
        t = next;
    }
    acc
}

/// `Ei(x) = PV ∫_{−∞}^x e^t/t dt`, `x ≠ 0`.
///
/// Power series for `0 < x <= 40` (positive terms), its asymptotic expansion
/// beyond, and `Ei(x) = −E1(−x)` for `x < 0`.
pub fn exp_integral_ei(x: f64) -> Result<f64> {
    if x == 0.0 || x.is_nan() {
        return Err(domain("Ei has a logarithmic singularity at 0"));
    }
    if x == f64::INFINITY {
        return Ok(f64::INFINITY);
    }
    if x < 0.0 {
        if x >= -1.0 {
            return Ok(euler_gamma() + libm::log(-x) + ein_tail(c(x)).re);
        }
        return exp_integral_e1(-x).map(|e| -e);
    }
    if x <= EI_SERIES_LIMIT {
        return Ok(euler_gamma() + libm::log(x) + ein_tail(c(x)).re);
    }
    let v = scaled_ei_positive(x) * libm::exp(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow)
    }
}

/// `(Shi z, Chi z)` by Taylor series, `|z| <= 40`, `z` off the non-positive
/// real axis (Chi carries `log z`).
pub fn shi_chi(z: ComplexValue) -> Result<(ComplexValue, ComplexValue)> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > SHI_CHI_RADIUS {
        return Err(domain(alloc::format!("shi_chi series needs |z| <= {SHI_CHI_RADIUS}, got {z}")));
    }
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(domain("Chi is cut along the non-positive real axis"));
    }
    let z2 = z * z;
    let mut shi = NeumaierComplex::new();
    let mut chi = NeumaierComplex::new();
    let mut odd = z; // z^{2k+1}/(2k+1)!
    let mut even = ComplexValue::new(1.0, 0.0); // z^{2k}/(2k)!
    shi.add(odd);
    for k in 1..MAX_SERIES_TERMS {
        let kk = 2.0 * k as f64;
        even = even * z2 / ((kk - 1.0) * kk);
        odd = odd * z2 / (kk * (kk + 1.0));
        let ts = odd / (kk + 1.0);
        let tc = even / kk;
        shi.add(ts);
        chi.add(tc);
        if ts.norm() <= 1e-17 * shi.value().norm() && tc.norm() <= 1e-17 * chi.value().norm().max(1e-300) {
            break;
        }
    }
    Ok((shi.value(), chi.value() + euler_gamma() + z.ln()))
}

/// `Shi z` by its odd Taylor series, `|z| <= 40`; entire, so `z = 0` is fine.
pub fn shi(z: ComplexValue) -> Result<ComplexValue> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > SHI_CHI_RADIUS {
        return Err(domain(alloc::format!("shi series needs |z| <= {SHI_CHI_RADIUS}, got {z}")));
    }
    let z2 = z * z;
    let mut acc = NeumaierComplex::new();
    let mut odd = z;
    acc.add(odd);
    for k in 1..MAX_SERIES_TERMS {
        let kk = 2.0 * k as f64;
        odd = odd * z2 / (kk * (kk + 1.0));
        let t = odd / (kk + 1.0);
        acc.add(t);
        if t.norm() <= 1e-17 * acc.value().norm() {
            break;
        }
    }
    Ok(acc.value())
}

/// Double-word `(Shi z, Chi z)` for complex `z` off the cut.
fn shi_chi_extended(z: ExtendedComplex) -> Result<(ExtendedComplex, ExtendedComplex)> {
    let z2 = z * z;
    let mut odd = z;
    let mut even = ExtendedComplex::ONE;
    let mut shi = z;
    let mut chi = ExtendedComplex::ZERO;
    let mut quiet = 0;
    for k in 1..MAX_SERIES_TERMS {
        let kk = 2.0 * k as f64;
        even = (even * z2).scale(ExtendedValue::new((kk - 1.0) * kk).recip());
        odd = (odd * z2).scale(ExtendedValue::new(kk * (kk + 1.0)).recip());
        let ts = odd.scale(ExtendedValue::new(kk + 1.0).recip());
        let tc = even.scale(ExtendedValue::new(kk).recip());
        shi += ts;
        chi += tc;
        if ts.norm_f64() <= 1e-34 * shi.norm_f64() && tc.norm_f64() <= 1e-34 * chi.norm_f64() {
            quiet += 1;
            if quiet == 3 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    let chi = chi + ExtendedComplex::real(extended_constants().euler_gamma) + z.ln()?;
    Ok((shi, chi))
}

/// `e^{−w} Ei(w)` by the double-word power series, `|arg w|` small so terms
/// exceed the sum by at most `e^{|w| − Re w}`.
fn scaled_ei_extended(w: ComplexValue) -> Result<ComplexValue> {
    let we = ExtendedComplex::from(w);
    let mut p = ExtendedComplex::ONE;
    let mut acc = ExtendedComplex::ZERO;
    let mut quiet = 0;
    for k in 1..MAX_SERIES_TERMS {
        p = (p * we).scale(ExtendedValue::new(k as f64).recip());
        let t = p.scale(ExtendedValue::new(k as f64).recip());
        acc += t;
        if t.norm_f64() <= 1e-34 * acc.norm_f64() {
            quiet += 1;
            if quiet == 3 {
                let ei = acc + ExtendedComplex::real(extended_constants().euler_gamma) + we.ln()?;
                return Ok((ei * (-we).exp()?).to_complex());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NoConvergence { terms: MAX_SERIES_TERMS, partial: acc.to_complex() })
}

/// `K(w) = sinh(w) Shi(w) − cosh(w) Chi(w)` for `Re w > 0`.
pub fn sinhshi_minus_coshchi(w: ComplexValue) -> Result<ComplexValue> {
    if !(w.re > 0.0) || !w.re.is_finite() || !w.im.is_finite() {
        return Err(domain(alloc::format!("the kernel needs Re w > 0, got {w}")));
    }
    if w.im == 0.0 {
        let x = w.re;
        return Ok(c(0.5 * (scaled_e1(c(x))?.re - scaled_ei_positive(x))));
    }
    if w.norm() <= KERNEL_DIRECT_RADIUS {
        let we = ExtendedComplex::from(w);
        let (shi, chi) = shi_chi_extended(we)?;
        let k = we.sinh()? * shi - we.cosh()? * chi;
        return Ok(k.to_complex());
    }
    if w.arg().abs() < KERNEL_AXIS_ANGLE {
        if w.norm() <= KERNEL_AXIS_SERIES_RADIUS {
            // K = ½(e^w E1(w) − e^{−w} Ei(w)) continued off the real axis
            let scaled_ei = scaled_ei_extended(w)?;
            return Ok((scaled_e1_fraction(w)? - scaled_ei) * 0.5);
        }
        // −Σ_{j odd} j!/w^{j+1} at its smallest term; neglects O(e^{−|w| cos 0.3})
        return Ok(odd_factorial_expansion(w));
    }
    // Ei(w) = −E1(−w) + iπ·sgn(Im w)
    let sign = if w.im > 0.0 { 1.0 } else { -1.0 };
    let a_plus = scaled_e1_fraction(w)?;
    let a_minus = scaled_e1_fraction(-w)?;
    let jump = ComplexValue::new(0.0, core::f64::consts::PI * sign) * (-w).exp();
    Ok((a_plus + a_minus - jump) * 0.5)
}

/// `−Σ_{j odd} j!/w^{j+1}`, truncated before its smallest term.
pub fn odd_factorial_expansion(w: ComplexValue) -> ComplexValue {
    let inv2 = (w * w).inv();
    let mut t = inv2; // j!/w^{j+1} at j = 1
    let mut acc = NeumaierComplex::new();
    let mut j = 1.0;
    loop {
        acc.add(-t);
        let next = t * inv2 * ((j + 1.0) * (j + 2.0));
        j += 2.0;
        if next.norm() >= t.norm() || next.norm() < 1e-18 * acc.value().norm() {
            break;
        }
        t = next;
    }
    acc.value()
}
