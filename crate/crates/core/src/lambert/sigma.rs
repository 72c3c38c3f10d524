//! The divisor-power Lambert series `Σ σ_a(n) e^{−ny}` and its transform
//! into the brackets
//!
//! `B_n = (2πn)^{−a} E_{2,1−a}(X²) − (2π/y)^a cosh X`, `X = 4π²n/y`,
//!
//! where `(2πn)^{−a} E_{2,1−a}(X²) = (2πn)^{−a} ₁F₂(1; (1−a)/2, 1−a/2; X²/4)/Γ(1−a)`.
//! Both pieces grow like `e^{Re X}` while `B_n = O(n^{−a−2})`, so `B_n`
//! loses about `Re X / ln 10` digits. Brackets are evaluated in double-word
//! while `Re X < 40`; the remaining `n` use the algebraic expansion
//! `B_n ~ −(2πn)^{−a} Σ_{j≥1} X^{−2j}/Γ(1−a−2j)` (exponentially small terms
//! dropped), which sums over `n` in closed form.

use core::f64::consts::{PI, TAU};

use crate::error::{domain, Error, Result};
use crate::numerics::{ComplexValue, ExtendedComplex, ExtendedValue, NeumaierComplex, SumResult, Tolerance};
use crate::report::{params, IdentityId, IdentityReport};
use crate::special::{rgamma, rgamma_extended, zeta, zeta_tail};

use super::divisor::divisor_power_sum;
use super::LambertParams;

/// Digits a double-word bracket may lose to cancellation.
pub const CANCELLATION_LIMIT: f64 = 30.0;
/// `Re X` from which the closed-form tail replaces direct brackets.
const DIRECT_REAL_LIMIT: f64 = 40.0;
const TAIL_ORDERS: usize = 40;

/// How brackets beyond the direct range are handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SigmaTail {
    /// Closed-form tail from `Re X >= 40` on.
    #[default]
    Asymptotic,
    /// Every bracket summed one by one; refuses once a bracket would lose
    /// more than [`CANCELLATION_LIMIT`] digits.
    DirectOnly,
}

fn ext(z: ComplexValue) -> ExtendedComplex {
    ExtendedComplex::from(z)
}

fn ext_real(x: f64) -> ExtendedComplex {
    ExtendedComplex::real(ExtendedValue::new(x))
}

fn is_real_integer(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re == libm::round(z.re)
}

fn check_exponent(a: ComplexValue) -> Result<()> {
    if !(a.re.is_finite() && a.im.is_finite()) {
        return Err(domain("a must be finite"));
    }
    if !(a.re > -1.0) {
        return Err(domain(alloc::format!("the sigma transform needs Re a > -1, got {a}")));
    }
    if is_real_integer(a) && libm::fmod(a.re, 2.0) == 0.0 {
        return Err(domain(alloc::format!("a must not be an even integer (cosec pole), got {a}")));
    }
    Ok(())
}

/// `4π²n/y`.
fn bracket_argument(n: u64, y: ComplexValue) -> ComplexValue {
    ComplexValue::new(4.0 * PI * PI * n as f64, 0.0) / y
}

/// Decimal digits lost to cancellation in the `n`-th bracket.
pub fn sigma_bracket_digits(n: u64, y: ComplexValue) -> f64 {
    bracket_argument(n, y).re.max(0.0) / core::f64::consts::LN_10
}

/// `E_{2,1−a}(X²) − X^a cosh X` in double-word.
fn bracket_core(a: ComplexValue, x: ComplexValue) -> Result<ExtendedComplex> {
    let xe = ext(x);
    let x2 = xe * xe;
    // β = 1 − a must be exact: e^X amplifies any rounding in it
    let beta = ExtendedComplex::ONE - ext(a);
    // 1/Γ(β + 2k) vanishes for β + 2k ∈ {0, −1, …}: start past those
    let mut k0 = 0usize;
    let b = 1.0 - a;
    if is_real_integer(b) && b.re <= 0.0 {
        k0 = (libm::floor(-b.re / 2.0) as usize) + 1;
    }
    let mut term = rgamma_extended(beta + ext_real(2.0 * k0 as f64))?;
    for _ in 0..k0 {
        term *= x2;
    }
    let mut acc = term;
    let peak = x.norm() as usize / 2 + 1;
    for k in k0..k0 + 4000 {
        let s = beta + ext_real(2.0 * k as f64);
        term = term * x2 * (s * (s + ExtendedComplex::ONE)).recip();
        acc += term;
        if k > peak && term.norm_f64() <= libm::ldexp(acc.norm_f64(), -110) {
            let power = (xe.ln()? * ext(a)).exp()?;
            return Ok(acc - power * xe.cosh()?);
        }
    }
    Err(Error::NoConvergence { terms: 4000, partial: acc.to_complex() })
}

/// `(2πn)^{−a} E_{2,1−a}(X²) − (2π/y)^a cosh X` at `X = 4π²n/y`, refusing
/// once it would lose more than [`CANCELLATION_LIMIT`] digits.
pub fn sigma_bracket(n: u64, a: ComplexValue, y: ComplexValue) -> Result<ComplexValue> {
    check_exponent(a)?;
    if n == 0 || !(y.re > 0.0) {
        return Err(domain("the sigma bracket needs n >= 1 and Re y > 0"));
    }
    let digits = sigma_bracket_digits(n, y);
    if digits > CANCELLATION_LIMIT {
        return Err(Error::Cancellation { n, digits, limit: CANCELLATION_LIMIT });
    }
    let prefactor = ComplexValue::new(TAU * n as f64, 0.0).powc(-a);
    Ok(bracket_core(a, bracket_argument(n, y))?.to_complex() * prefactor)
}

/// `Σ_{n≥n0} σ_a(n) n^{−s}` as `Σ_{d<n0} d^{a−s} Σ_{e≥⌈n0/d⌉} e^{−s} + ζ(s) Σ_{d≥n0} d^{a−s}`.
fn sigma_dirichlet_tail(a: ComplexValue, s: ComplexValue, n0: u64) -> Result<ComplexValue> {
    let mut acc = NeumaierComplex::new();
    for d in 1..n0 {
        let (t, _) = zeta_tail(s, n0.div_ceil(d) as usize)?;
        acc.add(t * ComplexValue::new(d as f64, 0.0).powc(a - s));
    }
    let (outer, _) = zeta_tail(s - a, n0 as usize)?;
    acc.add(zeta(s)? * outer);
    Ok(acc.value())
}

/// `Σ_{n≥n0} σ_a(n) B_n` from the algebraic bracket expansion.
fn bracket_tail(a: ComplexValue, y: ComplexValue, n0: u64) -> Result<(ComplexValue, usize)> {
    let r2 = (y / (4.0 * PI * PI)) * (y / (4.0 * PI * PI));
    let mut power = ComplexValue::new(1.0, 0.0);
    let mut acc = NeumaierComplex::new();
    let mut prev = f64::INFINITY;
    for j in 1..=TAIL_ORDERS {
        power *= r2;
        let g = rgamma(ComplexValue::new(1.0 - 2.0 * j as f64, 0.0) - a);
        let t = power * g * sigma_dirichlet_tail(a, a + 2.0 * j as f64, n0)?;
        let m = t.norm();
        if m > prev {
            return Ok((-acc.value() * ComplexValue::new(TAU, 0.0).powc(-a), j - 1));
        }
        acc.add(t);
        if m <= 1e-18 * acc.value().norm() {
            return Ok((-acc.value() * ComplexValue::new(TAU, 0.0).powc(-a), j));
        }
        prev = if m == 0.0 { prev } else { m };
    }
    Ok((-acc.value() * ComplexValue::new(TAU, 0.0).powc(-a), TAIL_ORDERS))
}

/// `Σ_{n≥1} σ_a(n) e^{−ny}`.
pub fn sigma_lambert(a: ComplexValue, p: &LambertParams) -> Result<SumResult> {
    let q = libm::exp(-p.y.re);
    // |σ_a(n)| <= n^{1 + max(Re a, 0)}, and n^k qⁿ falls geometrically once the ratio is < 1
    let k = 1.0 + a.re.max(0.0);
    let mut acc = NeumaierComplex::new();
    for n in 1..=p.tol.max_terms as u64 {
        let nf = n as f64;
        acc.add(divisor_power_sum(n, a) * (-(p.y * nf)).exp());
        let m = nf + 1.0;
        let ratio = q * libm::pow((m + 1.0) / m, k);
        if ratio < 1.0 {
            let head = libm::pow(m, k) * libm::pow(q, m);
            if head / (1.0 - ratio) <= p.tol.allowance(acc.value().norm()) {
                return Ok(SumResult { value: acc.value(), terms_used: n as usize });
            }
        }
    }
    Err(Error::NoConvergence { terms: p.tol.max_terms, partial: acc.value() })
}

/// Both sides of the divisor-power transformation
///
/// `Σ σ_a(n)e^{−ny} + ½((2π/y)^{1+a} cosec(πa/2) + 1) ζ(−a) − ζ(1−a)/y
///  = 2π/(y sin(πa/2)) Σ σ_a(n) B_n`.
pub fn sigma_lambert_check(a: ComplexValue, p: &LambertParams, tail: SigmaTail) -> Result<IdentityReport> {
    check_exponent(a)?;
    let y = p.y;
    let inner = p.tol.tightened(10.0);
    let one = ComplexValue::new(1.0, 0.0);
    let sine = (a * (PI / 2.0)).sin();

    let mut brackets = NeumaierComplex::new();
    let mut terms = 0;
    let mut n = 1u64;
    loop {
        let x = bracket_argument(n, y);
        if tail == SigmaTail::Asymptotic && x.re >= DIRECT_REAL_LIMIT {
            let (t, used) = bracket_tail(a, y, n)?;
            brackets.add(t);
            terms += used;
            break;
        }
        let b = divisor_power_sum(n, a) * sigma_bracket(n, a, y)?;
        brackets.add(b);
        terms += 1;
        if tail == SigmaTail::DirectOnly && n >= 2 && inner.accepts(b.norm(), brackets.value().norm()) {
            break;
        }
        if terms > inner.max_terms {
            return Err(Error::NoConvergence { terms, partial: brackets.value() });
        }
        n += 1;
    }
    let rhs = brackets.value() * TAU / (y * sine);

    // the zeta block cancels most of the series, so the series is summed
    // to an absolute allowance on the scale of the transformed side
    let series_tol = Tolerance { abs_tol: inner.allowance(rhs.norm()), rel_tol: 0.0, ..inner };
    let direct = sigma_lambert(a, &LambertParams { y, tol: series_tol })?;
    let mut lhs = NeumaierComplex::new();
    lhs.add(direct.value);
    lhs.add(((ComplexValue::new(TAU, 0.0) / y).powc(one + a) / sine + one) * zeta(-a)? * 0.5);
    lhs.add(-zeta(one - a)? / y);
    Ok(IdentityReport::compare(IdentityId::SigmaLambert, params(&[("a", a), ("y", y)]), lhs.value(), rhs, &p.tol)
        .with_costs(direct.terms_used + terms, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::hyp1f2;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn lp(y: ComplexValue, tol: f64) -> LambertParams {
        LambertParams::new(y, Tolerance::relative(tol)).unwrap()
    }

    #[test]
    fn bracket_matches_hypergeometric_form() {
        let y = c(8.0, 0.0);
        for a in [c(0.5, 0.0), c(1.5, 0.0), c(0.3, 0.2)] {
            for n in [1u64, 2] {
                let x = bracket_argument(n, y);
                let f = hyp1f2(
                    c(1.0, 0.0),
                    (c(1.0, 0.0) - a) * 0.5,
                    c(1.0, 0.0) - a * 0.5,
                    x * x * 0.25,
                    &Tolerance::relative(1e-30),
                )
                .unwrap();
                let lead = f * rgamma_extended(ext(c(1.0, 0.0) - a)).unwrap();
                let pre = c(TAU * n as f64, 0.0).powc(-a);
                let cosh = ext(x).cosh().unwrap().to_complex() * (c(TAU, 0.0) / y).powc(a);
                let expected = lead.to_complex() * pre - cosh;
                let got = sigma_bracket(n, a, y).unwrap();
                // the f64 route keeps ~16 − Re X/ln 10 digits
                let scale = cosh.norm() * 1e-14;
                assert!((got - expected).norm() < scale, "a = {a}, n = {n}: {got} vs {expected}");
            }
        }
    }

    #[test]
    fn bracket_decays_over_the_first_terms() {
        let y = c(8.0, 0.0);
        let a = c(0.5, 0.0);
        let mags: alloc::vec::Vec<f64> = (1..=5).map(|n| sigma_bracket(n, a, y).unwrap().norm()).collect();
        assert!(mags.windows(2).all(|w| w[1] < w[0]), "{mags:?}");
    }

    #[test]
    fn odd_integer_exponent_has_exponentially_small_brackets() {
        // a = 1: B_n = −(2π/y) e^{−X}
        let y = c(8.0, 0.0);
        let b = sigma_bracket(1, c(1.0, 0.0), y).unwrap();
        let x = bracket_argument(1, y).re;
        let expected = -(TAU / 8.0) * libm::exp(-x);
        assert!((b.re - expected).abs() < 1e-12 * expected.abs(), "{b} vs {expected}");
    }

    #[test]
    fn bracket_expansion_matches_direct_bracket() {
        // at the edge of the direct range the bracket keeps ~12 digits
        let y = c(8.0, 0.0);
        let a = c(0.5, 0.0);
        let n = 8u64;
        let direct = sigma_bracket(n, a, y).unwrap();
        let x = bracket_argument(n, y);
        let mut series = NeumaierComplex::new();
        let mut xp = c(1.0, 0.0);
        for j in 1..20 {
            xp /= x * x;
            series.add(xp * rgamma(c(1.0 - 2.0 * j as f64, 0.0) - a));
        }
        let expansion = -series.value() * c(TAU * n as f64, 0.0).powc(-a);
        assert!((direct - expansion).norm() < 1e-9 * expansion.norm(), "{direct} vs {expansion}");
    }

    #[test]
    fn dirichlet_tail_matches_brute_force() {
        let a = c(0.5, 0.0);
        let s = c(4.5, 0.0);
        let got = sigma_dirichlet_tail(a, s, 9).unwrap();
        let mut brute = NeumaierComplex::new();
        for n in 9..200_000u64 {
            brute.add(divisor_power_sum(n, a) * libm::pow(n as f64, -4.5));
        }
        assert!((got - brute.value()).norm() < 1e-12 * got.norm(), "{got} vs {}", brute.value());
    }

    #[test]
    fn transformation_holds() {
        for (a, y) in [
            (c(0.5, 0.0), c(8.0, 0.0)),
            (c(1.5, 0.0), c(8.0, 0.0)),
            (c(0.5, 0.0), c(3.0, 1.0)),
            (c(0.3, 0.4), c(1.0, 0.0)),
        ] {
            let r = sigma_lambert_check(a, &lp(y, 1e-9), SigmaTail::Asymptotic).unwrap();
            assert!(r.pass, "a = {a}, y = {y}: rel {}", r.rel_err);
        }
        // at a = 1, y = 2 both sides are ~2.6e-8 out of O(1) pieces
        let r = sigma_lambert_check(c(1.0, 0.0), &lp(c(2.0, 0.0), 1e-9), SigmaTail::Asymptotic).unwrap();
        assert!(r.abs_err < 1e-12 && (r.lhs.re + 2.640_403_434_28e-8).abs() < 1e-12, "{}", r.lhs);
    }

    #[test]
    fn direct_only_refuses_with_the_offending_index() {
        let err = sigma_lambert_check(c(0.5, 0.0), &lp(c(8.0, 0.0), 1e-6), SigmaTail::DirectOnly).unwrap_err();
        match err {
            Error::Cancellation { n, digits, limit } => {
                assert_eq!(limit, CANCELLATION_LIMIT);
                assert!(digits > limit && sigma_bracket_digits(n - 1, c(8.0, 0.0)) <= limit);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(sigma_bracket(40, c(0.5, 0.0), c(8.0, 0.0)), Err(Error::Cancellation { n: 40, .. })));
    }

    #[test]
    fn rejects_even_exponents_and_small_real_parts() {
        let p = lp(c(8.0, 0.0), 1e-6);
        assert!(sigma_lambert_check(c(2.0, 0.0), &p, SigmaTail::Asymptotic).is_err());
        assert!(sigma_lambert_check(c(0.0, 0.0), &p, SigmaTail::Asymptotic).is_err());
        assert!(sigma_lambert_check(c(-1.5, 0.0), &p, SigmaTail::Asymptotic).is_err());
    }

    #[test]
    fn small_exponent_approaches_the_plain_series() {
        // a → 0 turns the identity into the plain Lambert transform; both sides
        // carry O(1/a) pieces that cancel, which costs a few digits
        let r = sigma_lambert_check(c(1e-3, 0.0), &lp(c(1.0, 0.0), 1e-6), SigmaTail::Asymptotic).unwrap();
        assert!(r.pass, "rel {}", r.rel_err);
    }
}
