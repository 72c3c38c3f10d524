//! `ψ₁(z+1) − ½log²z = (1/2πi) ∫_{(c)} πζ(1−s)/sin(πs) · (γ − log z + ψ(s)) z^{−s} ds`
//! for `|arg z| < π`, `0 < c < 1`.
//!
//! On `s = c ± it` the integrand decays like `e^{−(π − |arg z|)t}`. The two
//! half-lines are integrated together, `(1/2π)∫₀^T [F(c+it) + F(c−it)] dt`,
//! so conjugate symmetry cancels the imaginary noise for real `z`.

use core::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::numerics::{integrate_adaptive, ComplexValue, QuadratureResult, Tolerance};
use crate::report::{params, IdentityId, IdentityReport};
use crate::special::{digamma, euler_gamma, psi1, zeta};

const MAX_DOUBLINGS: usize = 8;

/// Abscissa, first truncation height and tolerance of a line integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineIntegralSpec {
    pub c: f64,
    pub t_max: f64,
    pub tol: Tolerance,
}

impl LineIntegralSpec {
    pub fn new(c: f64, t_max: f64, tol: Tolerance) -> Result<Self> {
        if !(c > 0.0 && c < 1.0) {
            return Err(domain(alloc::format!("the line abscissa must lie in (0, 1), got {c}")));
        }
        if !(t_max > 0.0) || !t_max.is_finite() {
            return Err(domain(alloc::format!("t_max must be positive, got {t_max}")));
        }
        Ok(LineIntegralSpec { c, t_max, tol })
    }
}

impl Default for LineIntegralSpec {
    fn default() -> Self {
        LineIntegralSpec { c: 0.5, t_max: 40.0, tol: Tolerance::uniform(1e-10) }
    }
}

/// A line integral with the height it was truncated at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineIntegral {
    pub quadrature: QuadratureResult,
    pub t_max: f64,
    /// `(|F(c+iT)| + |F(c−iT)|)/(2π(π − |arg z|))`, the dropped tail.
    pub tail_estimate: f64,
}

fn check_argument(z: ComplexValue) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() == 0.0 || (z.im == 0.0 && z.re < 0.0) {
        return Err(domain(alloc::format!("needs |arg z| < pi, got {z}")));
    }
    Ok(())
}

/// `πζ(1−s)/sin(πs) · (γ − log z + ψ(s)) z^{−s}`.
pub fn line_integrand(z: ComplexValue, s: ComplexValue) -> Result<ComplexValue> {
    let one = ComplexValue::new(1.0, 0.0);
    let weight = ComplexValue::new(euler_gamma(), 0.0) - z.ln() + digamma(s)?;
    // 1/sin(πs) = ∓2i e^{±iπs}/(1 − e^{±2iπs}) with the sign of Im s taken so
    // the exponent stays small; merged with z^{−s} so neither part overflows
    let ips = ComplexValue::new(0.0, PI) * s;
    let (lead, sign) = if s.im >= 0.0 { (ips, -1.0) } else { (-ips, 1.0) };
    let ratio = ComplexValue::new(0.0, 2.0 * sign) * (lead - s * z.ln()).exp() / (one - (lead * 2.0).exp());
    Ok(zeta(one - s)? * PI * ratio * weight)
}

/// The line integral, doubling the height from `spec.t_max` until the tail
/// estimate falls below a tenth of the tolerance.
pub fn kloosterman_line_integral(z: ComplexValue, spec: &LineIntegralSpec) -> Result<LineIntegral> {
    check_argument(z)?;
    let spec = LineIntegralSpec::new(spec.c, spec.t_max, spec.tol)?;
    let decay = PI - z.arg().abs();
    let paired = |t: f64| -> ComplexValue {
        let up = line_integrand(z, ComplexValue::new(spec.c, t));
        let down = line_integrand(z, ComplexValue::new(spec.c, -t));
        match (up, down) {
            (Ok(a), Ok(b)) => (a + b) / (2.0 * PI),
            _ => ComplexValue::new(f64::NAN, f64::NAN),
        }
    };
    let edge = |t: f64| -> Result<f64> {
        let up = line_integrand(z, ComplexValue::new(spec.c, t))?;
        let down = line_integrand(z, ComplexValue::new(spec.c, -t))?;
        Ok((up.norm() + down.norm()) / (2.0 * PI * decay))
    };
    let inner = spec.tol.tightened(10.0);
    let mut total = integrate_adaptive(paired, 0.0, spec.t_max, &inner);
    let mut t = spec.t_max;
    for _ in 0..=MAX_DOUBLINGS {
        if !total.converged || !total.value.re.is_finite() {
            return Err(Error::Quadrature { value: total.value, err_estimate: total.err_estimate });
        }
        let tail = edge(t)?;
        if tail <= inner.allowance(total.value.norm()) {
            return Ok(LineIntegral { quadrature: total, t_max: t, tail_estimate: tail });
        }
        let more = integrate_adaptive(paired, t, 2.0 * t, &inner);
        total = QuadratureResult {
            value: total.value + more.value,
            err_estimate: total.err_estimate + more.err_estimate,
            n_evals: total.n_evals + more.n_evals,
            converged: more.converged,
        };
        t *= 2.0;
    }
    Err(Error::Budget(alloc::format!("line integral tail still above tolerance at t = {t}")))
}

/// `ψ₁(z+1) − ½log²z` against the line integral.
pub fn kloosterman_line_check(z: ComplexValue, spec: &LineIntegralSpec) -> Result<IdentityReport> {
    check_argument(z)?;
    let l = z.ln();
    let lhs = psi1(z + 1.0)? - l * l * 0.5;
    let line = kloosterman_line_integral(z, spec)?;
    let report = IdentityReport::compare(
        IdentityId::KloostermanLine,
        params(&[("z", z), ("c", ComplexValue::new(spec.c, 0.0))]),
        lhs,
        line.quadrature.value,
        &spec.tol,
    );
    Ok(report.with_costs(0, line.quadrature.n_evals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::stieltjes;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn lhs_at_one_is_minus_gamma1() {
        let lhs = psi1(c(2.0, 0.0)).unwrap();
        assert!((lhs.re + stieltjes(1).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn identity_holds() {
        let spec = LineIntegralSpec { tol: Tolerance::uniform(1e-8), ..LineIntegralSpec::default() };
        for z in [c(2.0, 0.0), c(1.0, 1.0), c(1.0, 0.0), c(0.5, -2.0)] {
            let r = kloosterman_line_check(z, &spec).unwrap();
            assert!(r.pass && r.abs_err < 1e-10, "{z}: {}", r.abs_err);
        }
    }

    #[test]
    fn abscissa_does_not_matter() {
        let tol = Tolerance::uniform(1e-10);
        for z in [c(2.0, 0.0), c(1.0, 1.0)] {
            let a = kloosterman_line_integral(z, &LineIntegralSpec::new(0.3, 40.0, tol).unwrap()).unwrap();
            let b = kloosterman_line_integral(z, &LineIntegralSpec::new(0.7, 40.0, tol).unwrap()).unwrap();
            assert!((a.quadrature.value - b.quadrature.value).norm() < 1e-9);
        }
    }

    #[test]
    fn integrand_decays_at_the_predicted_rate() {
        // log|F(c+it)| slope ≈ −π for z = 2
        let z = c(2.0, 0.0);
        let f = |t: f64| libm::log(line_integrand(z, c(0.5, t)).unwrap().norm());
        let slope = (f(30.0) - f(20.0)) / 10.0;
        assert!((slope + PI).abs() < 0.1 * PI, "{slope}");
    }

    #[test]
    fn steep_arguments_need_more_height() {
        let spec = LineIntegralSpec { tol: Tolerance::uniform(1e-8), ..LineIntegralSpec::default() };
        let line = kloosterman_line_integral(c(-3.0, 0.5), &spec).unwrap();
        assert!(line.t_max > 40.0);
        let r = kloosterman_line_check(c(-3.0, 0.5), &spec).unwrap();
        assert!(r.pass, "{}", r.abs_err);
    }

    #[test]
    fn rejects_the_cut_and_bad_abscissae() {
        assert!(kloosterman_line_integral(c(-1.0, 0.0), &LineIntegralSpec::default()).is_err());
        assert!(LineIntegralSpec::new(1.0, 40.0, Tolerance::default()).is_err());
    }
}
