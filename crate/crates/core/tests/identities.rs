//! Every identity family through the public API, on small grids.

use core::f64::consts::{PI, TAU};

use loglambert_core::kloosterman::*;
use loglambert_core::lambert::*;
use loglambert_core::moments::*;
use loglambert_core::numerics::{ComplexValue, Tolerance};

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn lambert(re: f64, im: f64, rel: f64) -> LambertParams {
    LambertParams::new(c(re, im), Tolerance::relative(rel)).unwrap()
}

#[test]
fn direct_sums_against_reference_values() {
    let v = lambert_log_lhs(&lambert(1.0, 0.0, 1e-15)).unwrap().value;
    assert!((v.re - 0.210_201_388_743_684_04).abs() < 1e-15);
    let v = lambert_log_lhs(&lambert(0.5, 0.5, 1e-15)).unwrap().value;
    assert!((v - c(-0.317_267_289_479_423_36, -0.672_813_409_131_501)).norm() < 1e-14, "{v}");
    let v = lambert_plain(&lambert(2.0, 0.0, 1e-15)).unwrap().value;
    assert!((v.re - 0.178_047_997_890_578_56).abs() < 1e-16);
}

#[test]
fn lambert_family() {
    for (re, im) in [(1.0, 0.0), (0.5, 0.0), (3.0, 2.0), (0.3, 0.2)] {
        assert!(lambert_log_check(&lambert(re, im, 1e-9)).unwrap().pass);
        assert!(lambert_log_alt_check(&lambert(re, im, 1e-8)).unwrap().pass);
    }
    for (re, im) in [(1.0, 0.0), (TAU, 0.0), (5.0, 3.0)] {
        assert!(wigert_check(&lambert(re, im, 1e-10)).unwrap().pass);
    }
    let tol = Tolerance::relative(1e-10);
    assert!(ramanujan_check(1, PI, &tol).unwrap().pass);
    assert!(ramanujan_check(2, PI / 2.0, &tol).unwrap().pass);
}

#[test]
fn sigma_transformation_and_refusal() {
    for a in [0.5, 1.5] {
        let p = LambertParams::new(c(8.0, 0.0), Tolerance::relative(1e-6)).unwrap();
        assert!(sigma_lambert_check(c(a, 0.0), &p, SigmaTail::Asymptotic).unwrap().pass);
    }
    let p = LambertParams::new(c(0.5, 0.0), Tolerance::relative(1e-6)).unwrap();
    let refused = sigma_lambert_check(c(0.5, 0.0), &p, SigmaTail::DirectOnly);
    assert!(matches!(refused, Err(loglambert_core::Error::Cancellation { .. })), "{refused:?}");
}

#[test]
fn small_y_expansion() {
    let r = lambert_asymptotic_check(c(0.05, 0.0), 3, 10_000_000).unwrap();
    assert!(r.pass, "{}", r.abs_err);
}

#[test]
fn kloosterman_family() {
    let tol = Tolerance::uniform(1e-8);
    for w in [c(1.0, 0.0), c(2.0, 0.0), c(1.0, 1.0)] {
        assert!(kernel_sum_check(w, &tol).unwrap().pass);
    }
    for z in [c(2.0, 0.0), c(1.0, 1.0)] {
        let spec = LineIntegralSpec::new(0.5, 40.0, tol).unwrap();
        assert!(kloosterman_line_check(z, &spec).unwrap().pass);
        let low = kloosterman_line_integral(z, &LineIntegralSpec::new(0.3, 40.0, tol).unwrap()).unwrap();
        let high = kloosterman_line_integral(z, &LineIntegralSpec::new(0.7, 40.0, tol).unwrap()).unwrap();
        assert!((low.quadrature.value - high.quadrature.value).norm() <= 1e-8);
    }
    let tol6 = Tolerance::uniform(1e-6);
    for w in [c(1.0, 0.0), c(2.0, 0.0)] {
        assert!(log_kernel_sum_check(w, &tol6).unwrap().pass);
    }
    for w in [c(0.5, 0.0), c(1.0, 0.0), c(2.0, 0.0)] {
        assert!(ml_derivative_check(w, &tol).unwrap().pass);
        assert!(kernel_integral_check(w, &tol).unwrap().pass);
        assert!(digamma_series_check(w, &tol).unwrap().pass);
    }
    for z in [c(0.0, 20.0), c(-15.0, 15.0), c(30.0, 0.0)] {
        assert!(psi1_asymptotic_check(z).unwrap().pass);
    }
}

#[test]
fn rotated_route_and_moment_at_coarse_delta() {
    let r = rotated_series_check(0.3, &Tolerance::uniform(1e-10)).unwrap();
    assert!(r.abs_err <= 1e-8);
    let p = MomentParams::new(0.5, Tolerance::uniform(1e-12)).unwrap();
    let m = smoothed_moment(&p).unwrap();
    assert!(m.residual.norm() < 10.0);
    let rot = rotated_series_route(0.5, &Tolerance::uniform(1e-12)).unwrap();
    // the remainder is regular: close to its small-δ value
    let phi = phi_remainder(&m, &rot).unwrap();
    assert!((phi - c(0.0, 1.889)).norm() < 0.05, "{phi}");
}
