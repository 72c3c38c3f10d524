//! Euler's constant, the Stieltjes constants γ₁ and γ₂, and the logarithm of
//! the Glaisher–Kinkelin constant.
//!
//! All are evaluated once, in double-word, from their limit definitions with
//! Euler–Maclaurin tail corrections at a cutoff of 30, and cached.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::{domain, Result};
use crate::numerics::bernoulli::bernoulli_extended;
use crate::numerics::ExtendedValue;

const CUTOFF: u32 = 30;
const MAX_CORRECTIONS: usize = 25;

/// Cached double-word constants.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedConstants {
    pub euler_gamma: ExtendedValue,
    pub stieltjes1: ExtendedValue,
    pub stieltjes2: ExtendedValue,
    pub log_glaisher: ExtendedValue,
    pub ln_tau: ExtendedValue,
    pub half_ln_tau: ExtendedValue,
}

/// The three Stieltjes constants in binary64.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StieltjesConstants {
    pub gamma0: f64,
    pub gamma1: f64,
    pub gamma2: f64,
}

static CONSTANTS: OnceBox<ExtendedConstants> = OnceBox::new();

pub fn extended_constants() -> &'static ExtendedConstants {
    CONSTANTS.get_or_init(|| Box::new(compute()))
}

fn ln(x: f64) -> ExtendedValue {
    ExtendedValue::new(x).ln().unwrap_or(ExtendedValue::ZERO)
}

fn compute() -> ExtendedConstants {
    let logs: Vec<ExtendedValue> = (1..=CUTOFF).map(|j| ln(j as f64)).collect();
    let ln_tau = ExtendedValue::TAU.ln().unwrap_or(ExtendedValue::ZERO);
    ExtendedConstants {
        euler_gamma: stieltjes_em(0, &logs),
        stieltjes1: stieltjes_em(1, &logs),
        stieltjes2: stieltjes_em(2, &logs),
        log_glaisher: glaisher_em(&logs),
        ln_tau,
        half_ln_tau: ln_tau.ldexp(-1),
    }
}

fn poly_eval(coeffs: &[f64], x: ExtendedValue) -> ExtendedValue {
    coeffs.iter().rev().fold(ExtendedValue::ZERO, |acc, &c| (acc * x).add_f64(c))
}

/// `γ_k = Σ_{j<N} h(j) − L^{k+1}/(k+1) + h(N)/2 − Σ_i B_{2i}/(2i)! h^{(2i−1)}(N)`
/// with `h(x) = ln^k x / x`, `L = ln N`.
fn stieltjes_em(k: usize, logs: &[ExtendedValue]) -> ExtendedValue {
    let n = CUTOFF as usize;
    let mut acc = ExtendedValue::ZERO;
    for j in 1..n {
        acc += logs[j - 1].powi(k as i32) / ExtendedValue::new(j as f64);
    }
    let l = logs[n - 1];
    let nn = ExtendedValue::new(n as f64);
    acc -= l.powi(k as i32 + 1) / ExtendedValue::new(k as f64 + 1.0);
    acc += l.powi(k as i32) / nn.mul_f64(2.0);
    // h^{(m)}(x) = Q_m(ln x) / x^{m+1}, Q_{m+1} = Q_m' − (m+1) Q_m
    let mut q = vec![0.0; k + 1];
    q[k] = 1.0;
    let mut factorial = ExtendedValue::ONE;
    let mut npow = nn; // N^{m+1}
    for m in 0..2 * MAX_CORRECTIONS {
        let mut next = vec![0.0; k + 1];
        for (d, c) in q.iter().enumerate() {
            if d > 0 {
                next[d - 1] += d as f64 * c;
            }
            next[d] -= (m + 1) as f64 * c;
        }
        q = next;
        npow *= nn;
        let order = m + 1; // derivative order now held in q
        factorial = factorial.mul_f64(order as f64);
        if order % 2 == 1 {
            let b = bernoulli_extended(order + 1);
            let coeff = b / factorial.mul_f64((order + 1) as f64);
            let term = coeff * poly_eval(&q, l) / npow;
            acc -= term;
            if term.to_f64().abs() < 1e-34 && order > 2 {
                break;
            }
        }
    }
    acc
}

/// `ln A = Σ_{k<N} k ln k − N² ln N/2 + N²/4 + N ln N/2 − ln N/12
///         + Σ_{i≥2} B_{2i} / ((2i)(2i−1)(2i−2) N^{2i−2})`.
fn glaisher_em(logs: &[ExtendedValue]) -> ExtendedValue {
    let n = CUTOFF as usize;
    let mut acc = ExtendedValue::ZERO;
    for j in 2..n {
        acc += logs[j - 1].mul_f64(j as f64);
    }
    let l = logs[n - 1];
    let nf = n as f64;
    acc -= l.mul_f64(nf * nf / 2.0);
    acc = acc.add_f64(nf * nf / 4.0);
    acc += l.mul_f64(nf / 2.0);
    acc -= l / ExtendedValue::new(12.0);
    let inv_n2 = ExtendedValue::new(nf * nf).recip();
    let mut p = inv_n2;
    for i in 2..=MAX_CORRECTIONS {
        let ii = 2.0 * i as f64;
        let term = bernoulli_extended(2 * i) * p / ExtendedValue::new(ii * (ii - 1.0) * (ii - 2.0));
        acc += term;
        if term.to_f64().abs() < 1e-34 {
            break;
        }
        p *= inv_n2;
    }
    acc
}

/// Euler's constant γ.
pub fn euler_gamma() -> f64 {
    extended_constants().euler_gamma.to_f64()
}

/// Stieltjes constant `γ_k` for `k ∈ {0, 1, 2}`.
pub fn stieltjes(k: usize) -> Result<f64> {
    let c = extended_constants();
    match k {
        0 => Ok(c.euler_gamma.to_f64()),
        1 => Ok(c.stieltjes1.to_f64()),
        2 => Ok(c.stieltjes2.to_f64()),
        _ => Err(domain("Stieltjes constants are provided for k <= 2")),
    }
}

pub fn stieltjes_constants() -> StieltjesConstants {
    let c = extended_constants();
    StieltjesConstants { gamma0: c.euler_gamma.to_f64(), gamma1: c.stieltjes1.to_f64(), gamma2: c.stieltjes2.to_f64() }
}

/// `ln A`, the logarithm of the Glaisher–Kinkelin constant.
pub fn glaisher_log_a() -> f64 {
    extended_constants().log_glaisher.to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_match_references() {
        let c = extended_constants();
        // 30-digit references; the Glaisher sum cancels terms of size ~1.5e3
        let refs = [
            (c.euler_gamma, 0.577_215_664_901_532_9, -4.942_915_152_430_645e-18),
            (c.stieltjes1, -0.072_815_845_483_676_73, 2.851_266_173_998_682e-18),
            (c.stieltjes2, -0.009_690_363_192_872_32, 7.744_776_654_821_997e-19),
            (c.log_glaisher, 0.248_754_477_033_784_25, 7.755_882_066_780_179e-18),
        ];
        for (got, hi, lo) in refs {
            let err = (got - ExtendedValue::from_parts(hi, lo)).to_f64().abs();
            assert!(err < 1e-28, "{got:?} vs {hi}: {err:e}");
        }
        assert!((c.ln_tau.to_f64() - 1.837_877_066_409_345_5).abs() < 1e-15);
    }

    #[test]
    fn limit_definition_oracle_agrees_at_two_cutoffs() {
        // raw limit with only the h(n)/2 correction, at n = 1e3 and 1e4
        fn raw(k: i32, n: usize) -> f64 {
            let mut s = crate::numerics::Neumaier::new();
            for j in 1..=n {
                let l = libm::log(j as f64);
                s.add(libm::pow(l, k as f64) / j as f64);
            }
            let l = libm::log(n as f64);
            s.add(-libm::pow(l, k as f64 + 1.0) / (k as f64 + 1.0));
            s.add(-libm::pow(l, k as f64) / (2.0 * n as f64));
            s.value()
        }
        let g1 = stieltjes(1).unwrap();
        assert!((raw(1, 1000) - g1).abs() < 1e-6);
        assert!((raw(1, 10_000) - g1).abs() < 1e-8);
        assert!(g1 < 0.0);
        assert!(stieltjes(3).is_err());
    }

    #[test]
    fn glaisher_brute_force_limit() {
        let n = 100_000usize;
        let mut s = crate::numerics::Neumaier::new();
        for k in 2..=n {
            s.add(k as f64 * libm::log(k as f64));
        }
        let nf = n as f64;
        let l = libm::log(nf);
        s.add(-(nf * nf / 2.0 + nf / 2.0 + 1.0 / 12.0) * l);
        s.add(nf * nf / 4.0);
        assert!((s.value() - glaisher_log_a()).abs() < 1e-6);
        assert!(glaisher_log_a() > 0.0);
    }
}
