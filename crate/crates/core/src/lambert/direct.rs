//! Direct summation of Lambert series `Σ a(n)/(e^{ny} − 1)` and of their
//! divisor forms `Σ (1∗a)(n) e^{−ny}`.

use crate::error::{Error, Result};
use crate::numerics::{exp_m1, ComplexValue, ExtendedValue, NeumaierComplex, SumResult};

use super::divisor::DivisorSieve;
use super::LambertParams;

/// `1/(e^{ny} − 1)`, stable for small and large `n·Re y`.
pub(crate) fn lambert_factor(n: f64, y: ComplexValue) -> ComplexValue {
    let z = y * n;
    if z.re > 1.0 {
        let q = (-z).exp();
        q / (ComplexValue::new(1.0, 0.0) - q)
    } else {
        exp_m1(z).inv()
    }
}

/// Sums `weight(n)/(e^{ny} − 1)` for `n >= 1` until
/// `Σ_{n>N} |weight(n)| e^{−n Re y}/(1 − e^{−Re y})` is within `tol`.
///
/// `weight_bound(N)` must bound `|weight(n)|` for `n > N` by
/// `L + (n − N − 1)·slope`, returned as `(L, slope)`.
fn weighted<W, B>(p: &LambertParams, mut weight: W, weight_bound: B) -> Result<SumResult>
where
    W: FnMut(usize) -> ComplexValue,
    B: Fn(usize) -> (f64, f64),
{
    let q = libm::exp(-p.y.re);
    let mut acc = NeumaierComplex::new();
    for n in 1..=p.tol.max_terms {
        acc.add(weight(n) * lambert_factor(n as f64, p.y));
        // Σ_{j≥0} q^{N+1+j}(L + j·slope), then 1/(1 − q^n) <= 1/(1 − q)
        let (l, slope) = weight_bound(n);
        let head = libm::pow(q, (n + 1) as f64);
        let bound = head * (l / (1.0 - q) + slope * q / ((1.0 - q) * (1.0 - q))) / (1.0 - q);
        if bound <= p.tol.allowance(acc.value().norm()) && n >= 2 {
            return Ok(SumResult { value: acc.value(), terms_used: n });
        }
    }
    Err(Error::NoConvergence { terms: p.tol.max_terms, partial: acc.value() })
}

/// `Σ_{n≥1} log(n)/(e^{ny} − 1)`.
pub fn lambert_log_lhs(p: &LambertParams) -> Result<SumResult> {
    // log n <= log(N+1) + (n − N − 1)/(N+1) for n > N
    weighted(p, |n| ComplexValue::new(libm::log(n as f64), 0.0), |n| (libm::log((n + 1) as f64), 1.0 / (n + 1) as f64))
}

/// `Σ_{n≥1} 1/(e^{ny} − 1)`.
pub fn lambert_plain(p: &LambertParams) -> Result<SumResult> {
    weighted(p, |_| ComplexValue::new(1.0, 0.0), |_| (1.0, 0.0))
}

/// `Σ_{n≥1} (γ + log(ny))/(e^{ny} − 1)`, with `log(ny) = log n + log y`.
pub fn lambert_gamma_log(p: &LambertParams) -> Result<SumResult> {
    let shift = ComplexValue::new(crate::special::euler_gamma(), 0.0) + p.y.ln();
    let s = shift.norm();
    weighted(p, |n| shift + libm::log(n as f64), |n| (s + libm::log((n + 1) as f64), 1.0 / (n + 1) as f64))
}

/// `½ Σ_{n≥1} d(n) log(n) e^{−ny}`, the divisor form of [`lambert_log_lhs`].
pub fn divisor_log_form(p: &LambertParams) -> Result<SumResult> {
    let q = libm::exp(-p.y.re);
    let mut limit = 1024;
    let mut sieve = DivisorSieve::new(limit);
    let mut acc = NeumaierComplex::new();
    for n in 1..=p.tol.max_terms {
        if n > limit {
            limit *= 2;
            sieve = DivisorSieve::new(limit);
        }
        let nf = n as f64;
        let t = (-(p.y * nf)).exp() * (sieve.count(n) as f64 * libm::log(nf) * 0.5);
        acc.add(t);
        // d(m) <= 2√m, and m^{3/2} log(m) q^m shrinks geometrically past N
        let m = nf + 1.0;
        let ratio = q * libm::pow((m + 1.0) / m, 1.5) * libm::log(m + 1.0) / libm::log(m);
        if ratio < 1.0 && n >= 2 {
            let head = libm::pow(m, 1.5) * libm::log(m) * libm::pow(q, m);
            if head / (1.0 - ratio) <= p.tol.allowance(acc.value().norm()) {
                return Ok(SumResult { value: acc.value(), terms_used: n });
            }
        }
    }
    Err(Error::NoConvergence { terms: p.tol.max_terms, partial: acc.value() })
}

/// `Σ_{n≥1} log(n)/(e^{ny} − 1)` in double-word for real `y > 0`, summed
/// until the remaining terms fall below `2^{-110}` of the sum.
pub fn lambert_log_lhs_extended(y: f64, max_terms: usize) -> Result<(ExtendedValue, usize)> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(crate::error::domain(alloc::format!("real Lambert sum needs y > 0, got {y}")));
    }
    let ye = ExtendedValue::new(y);
    let q = libm::exp(-y);
    let mut acc = ExtendedValue::ZERO;
    for n in 2..=max_terms {
        let nf = ExtendedValue::new(n as f64);
        let ln_n = nf.ln()?;
        let z = ye.mul_f64(n as f64);
        // 1/(e^z − 1) = e^{−z}/(1 − e^{−z}) once z is large
        let factor = if z.to_f64() > 1.0 {
            let e = (-z).exp()?;
            e * (ExtendedValue::ONE - e).recip()
        } else {
            (z.exp()? - ExtendedValue::ONE).recip()
        };
        acc += ln_n * factor;
        let np = (n + 1) as f64;
        let head = libm::pow(q, np);
        let bound = head * (libm::log(np) / (1.0 - q) + q / (np * (1.0 - q) * (1.0 - q))) / (1.0 - q);
        if bound <= libm::ldexp(acc.to_f64().abs(), -110) {
            return Ok((acc, n));
        }
    }
    Err(Error::NoConvergence { terms: max_terms, partial: ComplexValue::new(acc.to_f64(), 0.0) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Tolerance;

    fn params(re: f64, im: f64) -> LambertParams {
        LambertParams::new(ComplexValue::new(re, im), Tolerance::relative(1e-15)).unwrap()
    }

    fn brute_log(y: ComplexValue, terms: usize) -> ComplexValue {
        let mut acc = ComplexValue::new(0.0, 0.0);
        for n in 1..=terms {
            let z = y * n as f64;
            acc += ComplexValue::new(libm::log(n as f64), 0.0) / (z.exp() - 1.0);
        }
        acc
    }

    #[test]
    fn large_y_matches_brute_force() {
        let v = lambert_log_lhs(&params(10.0, 0.0)).unwrap();
        let b = brute_log(ComplexValue::new(10.0, 0.0), 50);
        assert!((v.value - b).norm() < 1e-24, "{}", v.value);
        assert!((v.value.re - 1.428_785_634_924_582e-9).abs() < 1e-23);
    }

    #[test]
    fn real_y_gives_real_positive_output() {
        for y in [0.3, 1.0, 4.0] {
            let v = lambert_log_lhs(&params(y, 0.0)).unwrap().value;
            assert!(v.im == 0.0 && v.re > 0.0);
        }
    }

    #[test]
    fn plain_sum_at_one() {
        let v = lambert_plain(&params(1.0, 0.0)).unwrap().value;
        let mut direct = 0.0;
        for n in 1..60 {
            direct += 1.0 / libm::expm1(n as f64);
        }
        assert!((v.re - direct).abs() < 1e-15);
        assert!((v.re - 0.820_259_511_542_416_8).abs() < 1e-15);
    }

    #[test]
    fn divisor_form_agrees() {
        for y in [ComplexValue::new(1.0, 0.0), ComplexValue::new(2.0, 0.0), ComplexValue::new(0.5, 0.0)] {
            let p = LambertParams::new(y, Tolerance::relative(1e-15)).unwrap();
            let a = lambert_log_lhs(&p).unwrap().value;
            let b = divisor_log_form(&p).unwrap().value;
            assert!((a - b).norm() < 1e-12 * a.norm(), "{y}: {a} vs {b}");
        }
    }

    #[test]
    fn extended_matches_binary64() {
        for y in [0.05, 0.7, 3.0] {
            let (e, _) = lambert_log_lhs_extended(y, 1_000_000).unwrap();
            let f = lambert_log_lhs(&params(y, 0.0)).unwrap().value.re;
            assert!((e.to_f64() - f).abs() < 1e-13 * f, "{y}");
        }
    }
}
