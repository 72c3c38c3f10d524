//! The log-weighted digamma analogue
//! `ψ₁(z) = −γ₁ − log z / z − Σ_{n≥1} (log(n+z)/(n+z) − log n / n)`
//! on `ℂ` minus the non-positive real axis.
//!
//! Fast path: shift by `ψ₁(z) = ψ₁(z+1) − log z / z` until `|w| >= radius`
//! and `Re w >= 0`, then sum the large-`|w|` expansion
//! `½ log²w − log w/(2w) + Σ_k B₂ₖ/(2k w^{2k}) (H_{2k−2} + 1/(2k−1) − log w)`
//! until terms stop mattering. Reference path: the defining series itself,
//! with an Euler–Maclaurin tail.

use crate::error::{domain, Error, Result};
use crate::numerics::bernoulli::bernoulli_f64;
use crate::numerics::{ComplexValue, NeumaierComplex, BERNOULLI_CAP};

use super::asymptotic::{AsymptoticSeries, Truncation};
use super::constants::stieltjes;

/// Default shift radius of [`psi1`].
pub const PSI1_RADIUS: f64 = 20.0;

/// Relative floor below which expansion terms are not resolvable in binary64.
pub const PSI1_RESOLUTION: f64 = 1.0 / (1u64 << 40) as f64;

fn check_domain(z: ComplexValue) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain("psi1 needs a finite argument"));
    }
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(domain(alloc::format!("psi1 is cut along the non-positive real axis, got {z}")));
    }
    Ok(())
}

fn harmonic(n: usize) -> f64 {
    (1..=n).rev().map(|j| 1.0 / j as f64).sum()
}

fn expansion_leading(z: ComplexValue) -> ComplexValue {
    let l = z.ln();
    l * l * 0.5 - l / (z * 2.0)
}

fn expansion_term(k: usize, z: ComplexValue) -> ComplexValue {
    let kk = 2 * k;
    let weight = harmonic(kk - 2) + 1.0 / (kk as f64 - 1.0);
    let coeff = bernoulli_f64(kk) / kk as f64;
    (ComplexValue::new(weight, 0.0) - z.ln()) * coeff / z.powi(kk as i32)
}

/// The large-`|z|` expansion of ψ₁ as a truncatable series.
pub const PSI1_EXPANSION: AsymptoticSeries = AsymptoticSeries {
    leading: expansion_leading,
    term: expansion_term,
    sector: core::f64::consts::PI,
    max_index: BERNOULLI_CAP / 2,
};

/// `ψ₁(z)` with shift radius [`PSI1_RADIUS`].
pub fn psi1(z: ComplexValue) -> Result<ComplexValue> {
    psi1_with_radius(z, PSI1_RADIUS)
}

/// `ψ₁(z)`, shifting until `|w| >= radius` (at least 10).
pub fn psi1_with_radius(z: ComplexValue, radius: f64) -> Result<ComplexValue> {
    check_domain(z)?;
    let radius = radius.max(10.0);
    let mut acc = NeumaierComplex::new();
    let mut w = z;
    while w.re < 0.0 || w.norm() < radius {
        acc.add(-w.ln() / w);
        w += 1.0;
    }
    acc.add(expansion_leading(w));
    for k in 1..=PSI1_EXPANSION.max_index {
        let t = expansion_term(k, w);
        acc.add(t);
        if t.norm() <= 1e-17 * acc.value().norm() {
            break;
        }
    }
    Ok(acc.value())
}

/// Partial sum of the large-`|z|` expansion through `k = terms`, with the
/// first omitted term as error proxy. Needs `|z| >= 2`.
pub fn psi1_asymptotic(z: ComplexValue, terms: usize) -> Result<Truncation> {
    check_domain(z)?;
    if z.norm() < 2.0 {
        return Err(domain("the psi1 expansion needs |z| >= 2"));
    }
    PSI1_EXPANSION.sum_through(z, terms)
}

/// Number of expansion terms kept at `z` under the resolution floor
/// [`PSI1_RESOLUTION`].
pub fn psi1_optimal_terms(z: ComplexValue) -> usize {
    PSI1_EXPANSION.resolved_index(z, PSI1_RESOLUTION)
}

/// `ψ₁(z)` straight from its defining series; slow but independent of the
/// expansion. The tail from `N ≈ 2|z| + 40` on is closed by Euler–Maclaurin
/// using `dᵐ/dxᵐ (log x / x) = (−1)ᵐ m! (log x − Hₘ)/x^{m+1}`.
pub fn psi1_reference(z: ComplexValue) -> Result<ComplexValue> {
    check_domain(z)?;
    let n_cut = (2.0 * z.norm()) as usize + 40;
    let nf = n_cut as f64;
    let mut acc = NeumaierComplex::new();
    acc.add(ComplexValue::new(-stieltjes(1)?, 0.0));
    acc.add(-z.ln() / z);
    let f = |n: f64| {
        let shifted = z + n;
        shifted.ln() / shifted - libm::log(n) / n
    };
    for n in 1..n_cut {
        acc.add(-f(n as f64));
    }
    // Σ_{n≥N} f(n) = −∫_N^∞ f + f(N)/2 − Σ B₂ₖ/(2k)! f^{(2k−1)}(N)
    let shifted = z + nf;
    let l_shift = shifted.ln();
    let l_n = libm::log(nf);
    let mut tail = NeumaierComplex::new();
    tail.add(-(l_shift * l_shift - l_n * l_n) * 0.5);
    tail.add(f(nf) * 0.5);
    let mut shifted_pow = shifted * shifted; // (N+z)^{m+1}, m = 2k−1
    let mut n_pow = nf * nf;
    let mut harmonic_m = 1.0;
    for k in 1..=BERNOULLI_CAP / 2 {
        let m = 2 * k - 1;
        if k > 1 {
            harmonic_m += 1.0 / (m as f64 - 1.0) + 1.0 / m as f64;
            shifted_pow *= shifted * shifted;
            n_pow *= nf * nf;
        }
        // (−1)^m m!/(2k)! = −1/(2k) for odd m = 2k−1
        let deriv = -((l_shift - harmonic_m) / shifted_pow - (l_n - harmonic_m) / n_pow);
        let t = -deriv * (bernoulli_f64(2 * k) / (2 * k) as f64);
        tail.add(t);
        if t.norm() <= 1e-18 * acc.value().norm().max(1e-300) {
            break;
        }
    }
    acc.add(-tail.value());
    let v = acc.value();
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::Overflow);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn values_at_one_and_two_are_minus_gamma1() {
        let g1 = stieltjes(1).unwrap();
        for z in [c(1.0, 0.0), c(2.0, 0.0)] {
            assert!((psi1(z).unwrap() - c(-g1, 0.0)).norm() < 1e-14);
            assert!((psi1_reference(z).unwrap() - c(-g1, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn cut_is_rejected() {
        assert!(psi1(c(0.0, 0.0)).is_err());
        assert!(psi1(c(-2.5, 0.0)).is_err());
        assert!(psi1_reference(c(-1.0, 0.0)).is_err());
        assert!(psi1(c(-2.5, 1e-3)).is_ok());
    }

    #[test]
    fn fast_and_reference_paths_agree() {
        for z in [c(0.3, 0.0), c(3.0, 4.0), c(-4.5, 2.0), c(0.0, 25.0), c(-15.0, 15.0), c(7.0, -0.5)] {
            let a = psi1(z).unwrap();
            let b = psi1_reference(z).unwrap();
            assert!((a - b).norm() <= 1e-13 * a.norm().max(1.0), "{z}: {a} vs {b}");
        }
    }

    #[test]
    fn reference_value() {
        // 30-digit evaluation of the defining series at N = 2000 plus its tail
        let v = psi1(c(3.0, 4.0)).unwrap();
        let expected = c(0.692_054_715_830_150_7, 1.568_344_996_246_502_1);
        assert!((v - expected).norm() < 1e-13, "{v}");
    }

    #[test]
    fn leading_block_and_first_term() {
        let z = c(0.0, 20.0);
        let t0 = psi1_asymptotic(z, 0).unwrap();
        let l = z.ln();
        assert!((t0.value - (l * l * 0.5 - l / (z * 2.0))).norm() < 1e-15);
        let proxy = ((c(1.0, 0.0) - l) / (z * z * 12.0)).norm();
        assert!((t0.first_omitted - proxy).abs() < 1e-18);
    }

    #[test]
    fn honest_truncation_on_large_arguments() {
        for z in [c(0.0, 20.0), c(-15.0, 15.0), c(30.0, 0.0)] {
            let k = psi1_optimal_terms(z);
            let t = psi1_asymptotic(z, k).unwrap();
            let reference = psi1_reference(z).unwrap();
            assert!((reference - t.value).norm() <= 2.0 * t.first_omitted, "{z}: k = {k}");
            assert!(!t.past_optimal);
        }
    }
}
