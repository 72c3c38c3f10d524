//! Adaptive Gauss–Kronrod (10/21-point) quadrature for complex integrands.
//!
//! Finite ranges use global bisection of the panel with the largest
//! embedded-rule error `|K21 - G10|`. Semi-infinite ranges are cut into
//! panels of geometrically growing width (capped at π); integration stops
//! after three consecutive panels each contribute less than a tenth of the
//! absolute allowance. Integrands whose π-panels keep alternating in sign
//! are finished by alternating-series acceleration of those panels.

use alloc::vec::Vec;

use super::oscillatory::EulerSum;
use super::{ComplexValue, Tolerance};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Gauss weights for the odd-indexed Kronrod nodes `XGK[1], XGK[3], ...`.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Evaluations per rule application.
pub const RULE_POINTS: usize = 21;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: ComplexValue,
    pub err_estimate: f64,
    pub n_evals: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: ComplexValue,
    err: f64,
}

/// One G10/K21 application on `[a, b]`: (Kronrod value, error estimate).
///
/// The estimate is `|K - G|`, floored at `50 ε ∫|f|` so that refinement
/// stops at the rounding level.
pub fn gauss_kronrod<F>(f: &mut F, a: f64, b: f64) -> (ComplexValue, f64)
where
    F: FnMut(f64) -> ComplexValue,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[10];
    let mut g = ComplexValue::new(0.0, 0.0);
    let mut abs = fc.norm() * WGK[10];
    for j in 0..10 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        let s = f1 + f2;
        k += s * WGK[j];
        abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    let value = k * h;
    let err = ((k - g) * h).norm().max(50.0 * f64::EPSILON * abs * h.abs());
    (value, err)
}

/// Adaptive integral of `f` over `[a, b]`; `b` may be `f64::INFINITY`.
///
/// Exhausting `tol.max_evals` returns the best estimate with
/// `converged = false`.
pub fn integrate_adaptive<F>(mut f: F, a: f64, b: f64, tol: &Tolerance) -> QuadratureResult
where
    F: FnMut(f64) -> ComplexValue,
{
    if b == f64::INFINITY {
        semi_infinite(&mut f, a, tol)
    } else {
        finite(&mut f, a, b, tol, tol.max_evals)
    }
}

fn finite<F>(f: &mut F, a: f64, b: f64, tol: &Tolerance, max_evals: usize) -> QuadratureResult
where
    F: FnMut(f64) -> ComplexValue,
{
    if a == b {
        return QuadratureResult { value: ComplexValue::new(0.0, 0.0), err_estimate: 0.0, n_evals: 0, converged: true };
    }
    let (value, err) = gauss_kronrod(f, a, b);
    let mut n_evals = RULE_POINTS;
    let mut panels: Vec<Panel> = alloc::vec![Panel { a, b, value, err }];
    let mut frozen_err = 0.0;
    let mut frozen_value = ComplexValue::new(0.0, 0.0);
    loop {
        let total: ComplexValue = panels.iter().map(|p| p.value).sum::<ComplexValue>() + frozen_value;
        let err: f64 = panels.iter().map(|p| p.err).sum::<f64>() + frozen_err;
        if tol.accepts(err, total.norm()) {
            return QuadratureResult { value: total, err_estimate: err, n_evals, converged: true };
        }
        if panels.is_empty() || n_evals + 2 * RULE_POINTS > max_evals {
            return QuadratureResult { value: total, err_estimate: err, n_evals, converged: false };
        }
        let worst = panels.iter().enumerate().max_by(|x, y| x.1.err.total_cmp(&y.1.err)).map(|(i, _)| i).unwrap_or(0);
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a.min(p.b) || mid >= p.a.max(p.b) {
            frozen_err += p.err;
            frozen_value += p.value;
            continue;
        }
        let (v1, e1) = gauss_kronrod(f, p.a, mid);
        let (v2, e2) = gauss_kronrod(f, mid, p.b);
        n_evals += 2 * RULE_POINTS;
        panels.push(Panel { a: p.a, b: mid, value: v1, err: e1 });
        panels.push(Panel { a: mid, b: p.b, value: v2, err: e2 });
    }
}

/// Panels that must stay quiet in a row before a semi-infinite tail is dropped.
const QUIET_PANELS: usize = 3;
/// Sign alternations in a row that hand the tail to the accelerator.
const ALTERNATION_STREAK: usize = 8;

fn semi_infinite<F>(f: &mut F, a: f64, tol: &Tolerance) -> QuadratureResult
where
    F: FnMut(f64) -> ComplexValue,
{
    let panel_tol = tol.tightened(8.0);
    let mut direct = ComplexValue::new(0.0, 0.0);
    let mut err = 0.0;
    let mut n_evals = 0;
    let mut quiet = 0;
    let mut alternations = 0;
    let mut previous: Option<ComplexValue> = None;
    let mut euler: Option<EulerSum> = None;
    let mut accelerated = ComplexValue::new(0.0, 0.0);
    let mut settled = 0;
    let mut left = a;
    let mut width: f64 = 0.5;
    while n_evals < tol.max_evals {
        let right = left + width;
        let budget = tol.max_evals - n_evals;
        let r = finite(f, left, right, &panel_tol, budget);
        n_evals += r.n_evals;
        err += r.err_estimate;
        if !r.converged {
            break;
        }
        left = right;
        if let Some(acc) = euler.as_mut() {
            let est = acc.push(r.value);
            let change = (est - accelerated).norm();
            accelerated = est;
            let total = direct + est;
            if acc.terms() > 4 && tol.accepts(change, total.norm()) {
                settled += 1;
                if settled == 2 {
                    let e = err + change;
                    return QuadratureResult {
                        value: total,
                        err_estimate: e,
                        n_evals,
                        converged: tol.accepts(e, total.norm()),
                    };
                }
            } else {
                settled = 0;
            }
            continue;
        }
        direct += r.value;
        if r.value.norm() < 0.1 * tol.allowance(direct.norm()) {
            quiet += 1;
            if quiet == QUIET_PANELS {
                return QuadratureResult {
                    value: direct,
                    err_estimate: err,
                    n_evals,
                    converged: tol.accepts(err, direct.norm()),
                };
            }
        } else {
            quiet = 0;
        }
        match previous {
            Some(p) if (p * r.value.conj()).re < 0.0 => alternations += 1,
            _ => alternations = 0,
        }
        previous = Some(r.value);
        if alternations >= ALTERNATION_STREAK && width == core::f64::consts::PI {
            euler = Some(EulerSum::new());
        }
        width = (2.0 * width).min(core::f64::consts::PI);
    }
    QuadratureResult { value: direct + accelerated, err_estimate: f64::INFINITY, n_evals, converged: false }
}
