//! Special functions against 30-digit reference values.

use loglambert_core::numerics::ComplexValue;
use loglambert_core::special::*;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn close(got: ComplexValue, want: ComplexValue, rel: f64) {
    assert!((got - want).norm() <= rel * want.norm(), "{got} vs {want}");
}

#[test]
fn zeta_on_and_off_the_line() {
    close(zeta(c(0.5, 14.0)).unwrap(), c(0.022_241_142_609_993_59, -0.103_258_123_266_450_06), 1e-12);
    close(zeta_prime(c(0.5, 14.0)).unwrap(), c(0.748_233_696_120_086_3, 0.204_436_533_784_997_42), 1e-12);
    close(zeta(c(3.0, -2.0)).unwrap(), c(0.973_041_960_418_942_4, 0.147_695_593_000_453_8), 1e-14);
    close(zeta(c(-2.5, 1.0)).unwrap(), c(0.023_593_610_586_379_65, 0.001_407_799_605_838_377), 1e-12);
    assert!(zeta(c(1.0, 0.0)).is_err());
}

#[test]
fn gamma_family() {
    close(log_gamma(c(3.0, 4.0)).unwrap(), c(-1.756_626_784_603_784, 4.742_664_438_034_658), 1e-14);
    close(digamma(c(1.0, 2.0)).unwrap(), c(0.714_591_515_373_977_5, 1.320_807_282_642_230_2), 1e-14);
}

#[test]
fn constants() {
    assert!((stieltjes(1).unwrap() + 0.072_815_845_483_676_72).abs() < 1e-16);
    assert!((glaisher_log_a() - 0.248_754_477_033_784_26).abs() < 1e-16);
    assert!((euler_gamma() - 0.577_215_664_901_532_9).abs() < 1e-16);
}

#[test]
fn exponential_integrals_and_kernel() {
    assert!((exp_integral_e1(2.0).unwrap() - 0.048_900_510_708_061_12).abs() < 1e-17);
    assert!((exp_integral_ei(3.0).unwrap() - 9.933_832_570_625_416).abs() < 1e-14);
    let (s, ch) = shi_chi(c(2.0, 0.0)).unwrap();
    close(s, c(2.501_567_433_354_975_6, 0.0), 1e-15);
    close(ch, c(2.452_666_922_646_914_5, 0.0), 1e-15);
    close(sinhshi_minus_coshchi(c(1.0, 0.0)).unwrap(), c(-0.050_413_760_455_936, 0.0), 1e-14);
    close(sinhshi_minus_coshchi(c(1.0, 1.0)).unwrap(), c(-0.339_656_519_109_728_9, -0.095_539_503_916_541_53), 1e-14);
}

#[test]
fn generalized_digamma_at_small_integers() {
    // ψ₁(1) = ψ₁(2) = −γ₁
    let g1 = stieltjes(1).unwrap();
    close(psi1(c(1.0, 0.0)).unwrap(), c(-g1, 0.0), 1e-13);
    close(psi1(c(2.0, 0.0)).unwrap(), c(-g1, 0.0), 1e-13);
}

#[test]
fn mittag_leffler_limits() {
    // E_{2,1}(w²) = cosh w; ∂²_b E_{2,b}(w²) at b = 1 tends to γ² − π²/6
    let w = c(0.7, 0.2);
    close(mittag_leffler_e2b(w * w, 1.0).unwrap(), w.cosh(), 1e-14);
    let g = euler_gamma();
    let limit = g * g - core::f64::consts::PI.powi(2) / 6.0;
    let v = ml_d2b_at1(c(1e-9, 0.0), D2bMode::Series).unwrap();
    assert!((v.re - limit).abs() <= 1e-12, "{v}");
}
