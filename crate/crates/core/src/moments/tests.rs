use super::*;
use crate::numerics::ComplexValue;

fn tol() -> Tolerance {
    Tolerance::uniform(1e-12)
}

#[test]
fn integrand_at_zero_is_real() {
    let v = zeta_pair_integrand(0.0).unwrap();
    assert!(v.im.abs() < 1e-15);
    assert!((v.re - 5.728_453_975_858_603).abs() < 1e-13, "{v}");
}

#[test]
fn integrand_vanishes_at_the_first_zero() {
    let v = zeta_pair_integrand(14.134_725).unwrap();
    let zp = crate::special::zeta_prime(ComplexValue::new(0.5, 14.134_725)).unwrap();
    assert!(v.norm() < 1e-4 * zp.norm(), "{v}");
}

#[test]
fn integrand_is_conjugate_zeta_times_derivative() {
    for t in [0.3, 7.0, 33.3, 120.0] {
        let (z, zp) = zeta_pair(ComplexValue::new(0.5, t)).unwrap();
        let v = zeta_pair_integrand(t).unwrap();
        assert!((v - z.conj() * zp).norm() < 1e-12 * v.norm().max(1.0), "t = {t}");
        assert!(zeta_square_integrand(t).unwrap().re >= 0.0);
    }
    assert!(zeta_pair_integrand(-1.0).is_err());
}

#[test]
fn main_terms() {
    let g = euler_gamma();
    let d = 1.0 / TAU;
    let lead = moment_leading_term(d).unwrap();
    assert!((lead.re - (g * g - PI * PI / 6.0) / (4.0 * libm::sin(0.5 * d))).abs() < 1e-14);
    let second = second_moment_leading_term(d).unwrap();
    assert!((second.re - g / (2.0 * libm::sin(0.5 * d))).abs() < 1e-14);
    assert!((moment_leading_term(0.5).unwrap().re + 2.649_677_335_902_771).abs() < 1e-14);
    // δ → 0: −log²(2πδ)/(2δ)
    let d = 1e-6;
    let l = libm::log(TAU * d);
    assert!((moment_leading_term(d).unwrap().re / (-l * l / (2.0 * d)) - 1.0).abs() < 0.02);
    assert!(moment_leading_term(7.0).is_err());
}

#[test]
fn singular_term_differs_by_a_logarithm() {
    for d in [0.4, 0.1, 0.01] {
        let gap = moment_singular_term(d).unwrap() - moment_leading_term(d).unwrap();
        assert!((gap.im - 0.5 * libm::log(TAU * d)).abs() < 0.05, "delta = {d}: {gap}");
        assert!(gap.re.abs() < 0.1);
    }
}

#[test]
fn parameters_are_guarded() {
    assert!(MomentParams::new(4.0, tol()).is_err());
    assert!(MomentParams::new(0.0, tol()).is_err());
    let p = MomentParams::new(0.5, tol()).unwrap();
    assert_eq!(p.t_cap, 80.0);
    assert!(p.with_t_cap(50.0).is_err());
}

#[test]
fn moment_at_half_is_stable() {
    let p = MomentParams::new(0.5, tol()).unwrap();
    let m = smoothed_moment(&p).unwrap();
    assert!(m.integral.re.is_finite() && m.residual.norm() < 10.0, "{m:?}");
    let wide = smoothed_moment(&p.with_t_cap(2.0 * p.t_cap).unwrap()).unwrap();
    assert!((wide.integral - m.integral).norm() <= 1e-12 * m.integral.norm());
    let mirrored = mirrored_moment(&p).unwrap();
    assert!((mirrored.value - m.integral.conj()).norm() <= 1e-10);
}

#[test]
fn second_moment_is_real_and_converges() {
    let suite = moment_suite(SuiteKind::SecondMoment, &[0.4, 0.2, 0.1], &tol()).unwrap();
    assert!(suite.reports.iter().all(|r| r.integral.im == 0.0 && r.integral.re > 0.0));
    assert!(suite.pass(), "{:?}", suite.residuals());
}

#[test]
fn singular_residuals_converge_in_both_parts() {
    let deltas = halving_grid(0.4, 3);
    let suite = moment_suite(SuiteKind::ZetaMoment, &deltas, &tol()).unwrap();
    assert!(suite.pass(), "{suite:?}");
    let s: Vec<ComplexValue> = suite.reports.iter().map(|r| r.singular_residual).collect();
    let (first, second) = ((s[0] - s[1]).norm(), (s[1] - s[2]).norm());
    // roughly linear convergence in δ
    assert!(second < 0.7 * first, "{first} {second}");
    let (a, b) = (suite.constant.unwrap(), suite.singular_constant.unwrap());
    assert!((a.re - b.re).abs() < 0.05, "{a} {b}");
}

#[test]
fn cauchy_and_richardson_helpers() {
    let r = |x: f64| ComplexValue::new(1.0 + x, 0.0);
    assert!(cauchy_shrinks(&[r(0.4), r(0.2), r(0.1)]));
    assert!(!cauchy_shrinks(&[r(0.1), r(0.2), r(0.4)]));
    assert!(!cauchy_shrinks(&[r(0.4), r(0.2)]));
    assert!((extract_constant(&[r(0.4), r(0.2), r(0.1)]).unwrap().re - 1.0).abs() < 1e-15);
    assert_eq!(halving_grid(0.4, 3), alloc::vec![0.4, 0.2, 0.1]);
}

#[test]
fn rotated_point_geometry() {
    let y = rotated_point(0.3);
    assert!((y.re - TAU * libm::sin(0.3)).abs() < 1e-14);
    let direct = ComplexValue::new(0.0, TAU) * (ComplexValue::from_polar(1.0, -0.3) - 1.0);
    assert!((y - direct).norm() < 1e-14);
}

#[test]
fn rotated_routes_agree() {
    let r = rotated_series_check(0.3, &Tolerance::uniform(1e-10)).unwrap();
    assert!(r.pass && r.abs_err <= 1e-8, "{}", r.abs_err);
    assert!(rotated_series_route(1.7, &tol()).is_err());
}

#[test]
fn rotated_series_grows_like_its_leading_term() {
    let a = rotated_series_route(0.05, &tol()).unwrap();
    // log²y/y + (π²/6 − γ²)/y − ½ log 2π + O(y)
    let g = euler_gamma();
    let ly = a.y.ln();
    let lead = (ly * ly + (PI * PI / 6.0 - g * g)) / a.y - 0.5 * libm::log(TAU);
    assert!((a.direct - lead).norm() < 0.1, "{} vs {lead}", a.direct);
}

#[test]
fn remainder_is_smooth_where_the_moment_is_not() {
    // one-step quadratic extrapolation from δ = 0.4, 0.3, 0.2 to 0.1
    let deltas = [0.4, 0.3, 0.2, 0.1];
    let mut phi = alloc::vec::Vec::new();
    let mut raw = alloc::vec::Vec::new();
    for d in deltas {
        let m = smoothed_moment(&MomentParams::new(d, tol()).unwrap()).unwrap();
        let r = rotated_series_route(d, &tol()).unwrap();
        phi.push(phi_remainder(&m, &r).unwrap());
        raw.push(m.integral);
    }
    let extrapolate = |v: &[ComplexValue]| v[2] * 3.0 - v[1] * 3.0 + v[0];
    assert!((extrapolate(&phi) - phi[3]).norm() < 1e-4, "{phi:?}");
    assert!((extrapolate(&raw) - raw[3]).norm() > 0.1);
}
