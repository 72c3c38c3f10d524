//! `4 Σ_{m≥1} ∫₀^∞ u cos u log(u/w)/(u² + (2πmw)²) du
//!  = ψ₁(iw) − ½log²(iw) + ψ₁(−iw) − ½log²(−iw) + π/(2w) + γ(ψ(iw) + ψ(−iw) − 2 log w)`.
//!
//! With `W = 2πmw`, the inner integral behaves like
//! `−Σ_{j≥0} (2j+1)! (ψ(2j+2) − log w) W^{−2j−2}` up to `O(e^{−Re W})`, so the
//! `m`-tail past `Re W >= 40` sums through `Σ_{m≥M} m^{−2j−2}`.

use core::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::numerics::{integrate_oscillatory, ComplexValue, NeumaierComplex, Oscillator, QuadratureResult, Tolerance};
use crate::report::{params, IdentityId, IdentityReport};
use crate::special::{digamma, euler_gamma, psi1, zeta_tail};

use super::{check_right_half_plane, i_times, KERNEL_TAIL_REAL};

const MAX_ORDERS: usize = 40;

/// The `m`-sum split into quadratures and the closed-form tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalogueSum {
    pub value: ComplexValue,
    /// Inner integrals done by quadrature (`m < M`).
    pub direct_terms: usize,
    /// `|4 Σ_{m≥M} …|`.
    pub tail_estimate: f64,
    pub evals: usize,
}

/// `∫₀^∞ u cos u log(u/w)/(u² + (2πmw)²) du` by oscillatory quadrature.
pub fn analogue_term(m: usize, w: ComplexValue, tol: &Tolerance) -> Result<QuadratureResult> {
    check_right_half_plane(w)?;
    let big = w * (TAU * m as f64);
    let big2 = big * big;
    let lw = w.ln();
    integrate_oscillatory(
        |u| {
            if u == 0.0 {
                return ComplexValue::new(0.0, 0.0);
            }
            (ComplexValue::new(libm::log(u), 0.0) - lw) * u / (big2 + u * u)
        },
        Oscillator::Cos,
        tol,
    )
}

/// The left side, with quadrature while `Re(2πmw) < tail_real` (default 40).
pub fn log_kernel_sum_lhs(w: ComplexValue, tol: &Tolerance, tail_real: Option<f64>) -> Result<AnalogueSum> {
    check_right_half_plane(w)?;
    let threshold = tail_real.unwrap_or(KERNEL_TAIL_REAL);
    let m_tail = (libm::ceil(threshold / (TAU * w.re)) as usize).max(1);
    // 4·(M − 1) quadratures share a tenth of the tolerance
    let per_term = tol.tightened(40.0 * m_tail as f64);
    let mut acc = NeumaierComplex::new();
    let mut evals = 0;
    for m in 1..m_tail {
        let q = analogue_term(m, w, &per_term)?;
        if !q.converged {
            return Err(Error::Quadrature { value: q.value, err_estimate: q.err_estimate });
        }
        evals += q.n_evals;
        acc.add(q.value * 4.0);
    }
    let lw = w.ln();
    let inv2 = (w * TAU * (w * TAU)).inv();
    let mut power = ComplexValue::new(1.0, 0.0);
    let mut factorial = 1.0; // (2j+1)!
    let mut harmonic = 1.0; // H_{2j+1}
    let mut tail = NeumaierComplex::new();
    let mut prev = f64::INFINITY;
    for j in 0..MAX_ORDERS {
        power *= inv2;
        if j > 0 {
            let (a, b) = ((2 * j) as f64, (2 * j + 1) as f64);
            factorial *= a * b;
            harmonic += 1.0 / a + 1.0 / b;
        }
        let (z, _) = zeta_tail(ComplexValue::new((2 * j + 2) as f64, 0.0), m_tail)?;
        let psi = ComplexValue::new(harmonic - euler_gamma(), 0.0);
        let t = -power * z * (psi - lw) * (4.0 * factorial);
        if t.norm() >= prev {
            break;
        }
        tail.add(t);
        prev = t.norm();
        if prev <= 1e-18 * tail.value().norm() {
            break;
        }
    }
    acc.add(tail.value());
    Ok(AnalogueSum { value: acc.value(), direct_terms: m_tail - 1, tail_estimate: tail.value().norm(), evals })
}

/// The ψ₁/digamma closed form.
pub fn log_kernel_sum_rhs(w: ComplexValue) -> Result<ComplexValue> {
    check_right_half_plane(w)?;
    let x = i_times(w);
    let (lp, lm) = (x.ln(), (-x).ln());
    let g = euler_gamma();
    Ok(psi1(x)? - lp * lp * 0.5 + psi1(-x)? - lm * lm * 0.5
        + ComplexValue::new(PI / 2.0, 0.0) / w
        + (digamma(x)? + digamma(-x)? - w.ln() * 2.0) * g)
}

pub fn log_kernel_sum_check(w: ComplexValue, tol: &Tolerance) -> Result<IdentityReport> {
    let lhs = log_kernel_sum_lhs(w, tol, None)?;
    let rhs = log_kernel_sum_rhs(w)?;
    Ok(IdentityReport::compare(IdentityId::LogKernelSum, params(&[("w", w)]), lhs.value, rhs, tol)
        .with_costs(lhs.direct_terms, lhs.evals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{ml_d2b_at1, sinhshi_minus_coshchi, D2bMode};

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn identity_holds() {
        let tol = Tolerance::uniform(1e-6);
        for w in [c(1.0, 0.0), c(2.0, 0.0), c(0.7, 0.3)] {
            let r = log_kernel_sum_check(w, &tol).unwrap();
            assert!(r.pass, "{w}: {}", r.abs_err);
        }
    }

    #[test]
    fn real_w_gives_real_sides() {
        let tol = Tolerance::uniform(1e-6);
        let r = log_kernel_sum_check(c(1.0, 0.0), &tol).unwrap();
        assert!(r.lhs.im.abs() < 1e-12 && r.rhs.im.abs() < 1e-12, "{} {}", r.lhs, r.rhs);
    }

    #[test]
    fn log_split_matches_the_combined_kernel() {
        // log(u/w) = log u − log w: the log u integral is the Mittag-Leffler
        // b-derivative remainder, the constant part is the plain kernel
        let tol = Tolerance::uniform(1e-11);
        for w in [c(1.0, 0.0), c(0.4, 0.0)] {
            let big = w * TAU;
            let combined = analogue_term(1, w, &tol).unwrap().value;
            let l = big.ln();
            let log_part = (ml_d2b_at1(big, D2bMode::Series).unwrap() - l * l * big.cosh()) * 0.5;
            let split = log_part - w.ln() * sinhshi_minus_coshchi(big).unwrap();
            assert!((combined - split).norm() < 1e-8, "{w}: {combined} vs {split}");
        }
    }

    #[test]
    fn doubling_the_quadrature_range_stays_within_the_tail() {
        let tol = Tolerance::uniform(1e-8);
        let w = c(1.0, 0.0);
        let base = log_kernel_sum_lhs(w, &tol, None).unwrap();
        let wide = log_kernel_sum_lhs(w, &tol, Some(2.0 * KERNEL_TAIL_REAL)).unwrap();
        assert!(wide.direct_terms > base.direct_terms);
        assert!(
            (base.value - wide.value).norm() < base.tail_estimate,
            "{} vs tail {}",
            (base.value - wide.value).norm(),
            base.tail_estimate
        );
    }
}
