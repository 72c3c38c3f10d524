//! Outcome records for identity checks.

use alloc::string::String;
use alloc::vec::Vec;

use crate::numerics::{ComplexValue, Tolerance};

/// Every identity the crate can check, with a stable machine name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    LambertLog,
    LambertLogAlt,
    Wigert,
    Ramanujan,
    SigmaLambert,
    LambertAsymptotic,
    DivisorForm,
    KernelSum,
    KloostermanLine,
    LogKernelSum,
    Psi1Asymptotic,
    MlDerivative,
    KernelIntegral,
    DigammaSeries,
    SecondMoment,
    ZetaMoment,
    RotatedSeries,
}

impl IdentityId {
    pub const ALL: [IdentityId; 17] = [
        IdentityId::LambertLog,
        IdentityId::LambertLogAlt,
        IdentityId::Wigert,
        IdentityId::Ramanujan,
        IdentityId::SigmaLambert,
        IdentityId::LambertAsymptotic,
        IdentityId::DivisorForm,
        IdentityId::KernelSum,
        IdentityId::KloostermanLine,
        IdentityId::LogKernelSum,
        IdentityId::Psi1Asymptotic,
        IdentityId::MlDerivative,
        IdentityId::KernelIntegral,
        IdentityId::DigammaSeries,
        IdentityId::SecondMoment,
        IdentityId::ZetaMoment,
        IdentityId::RotatedSeries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::LambertLog => "lambert-log",
            IdentityId::LambertLogAlt => "lambert-log-alt",
            IdentityId::Wigert => "wigert",
            IdentityId::Ramanujan => "ramanujan",
            IdentityId::SigmaLambert => "sigma-lambert",
            IdentityId::LambertAsymptotic => "lambert-asymptotic",
            IdentityId::DivisorForm => "divisor-form",
            IdentityId::KernelSum => "kernel-sum",
            IdentityId::KloostermanLine => "kloosterman-line",
            IdentityId::LogKernelSum => "log-kernel-sum",
            IdentityId::Psi1Asymptotic => "psi1-asymptotic",
            IdentityId::MlDerivative => "ml-derivative",
            IdentityId::KernelIntegral => "kernel-integral",
            IdentityId::DigammaSeries => "digamma-series",
            IdentityId::SecondMoment => "second-moment",
            IdentityId::ZetaMoment => "zeta-moment",
            IdentityId::RotatedSeries => "rotated-series",
        }
    }

    /// One-line mathematical description of what the check compares.
    pub fn description(self) -> &'static str {
        match self {
            IdentityId::LambertLog => "sum log(n)/(e^{ny}-1) = psi/psi1 bracket transform in 2*pi*i*n/y",
            IdentityId::LambertLogAlt => "y*sum (gamma+log(ny))/(e^{ny}-1) + closed block = psi1 bracket series",
            IdentityId::Wigert => "sum 1/(e^{ny}-1) = 1/4 + (gamma-log y)/y + digamma bracket series",
            IdentityId::Ramanujan => "odd zeta values: alpha/beta Lambert transformation with Bernoulli block",
            IdentityId::SigmaLambert => "sum sigma_a(n)e^{-ny} + zeta block = 1F2/cosh bracket series",
            IdentityId::LambertAsymptotic => "small-y expansion of sum log(n)/(e^{ny}-1) with log A and zeta'(2k)",
            IdentityId::DivisorForm => "sum log(n)/(e^{ny}-1) = 1/2 sum d(n)log(n)e^{-ny}",
            IdentityId::KernelSum => "sum_n int t cos t/(t^2+n^2w^2) dt = digamma closed form",
            IdentityId::KloostermanLine => "vertical-line Mellin integral = psi1(z+1) - log^2(z)/2",
            IdentityId::LogKernelSum => "4 sum_m int u cos u log(u/w)/(u^2+(2 pi m w)^2) du = psi1 closed form",
            IdentityId::Psi1Asymptotic => "psi1 reference series vs optimally truncated large-z expansion",
            IdentityId::MlDerivative => "second b-derivative of E_{2,b}(w^2) at b=1: series vs log-integral form",
            IdentityId::KernelIntegral => "int t cos t/(t^2+w^2) dt = sinh(w)Shi(w) - cosh(w)Chi(w)",
            IdentityId::DigammaSeries => "sum psi(2k+1)w^{2k}/(2k)! = sinh Shi - cosh Chi + log(w)cosh(w)",
            IdentityId::SecondMoment => {
                "smoothed |zeta(1/2+it)|^2 moment minus (gamma-log(2 pi delta))/(2 sin(delta/2))"
            }
            IdentityId::ZetaMoment => "smoothed zeta(1/2-it)zeta'(1/2+it) moment minus log^2 leading term",
            IdentityId::RotatedSeries => "sum d(n)log(n)e^{-ny} at y=2 pi i(e^{-i delta}-1): direct vs transformed",
        }
    }

    pub fn from_name(name: &str) -> Option<IdentityId> {
        IdentityId::ALL.iter().copied().find(|id| id.name() == name)
    }
}

/// Both sides of one identity at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: IdentityId,
    /// Parameter names and values, in a fixed order.
    pub params: Vec<(String, ComplexValue)>,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub abs_err: f64,
    pub rel_err: f64,
    /// `abs_err <= abs_tol || rel_err <= rel_tol`.
    pub pass: bool,
    /// Series terms consumed on both sides.
    pub terms: usize,
    /// Integrand evaluations consumed on both sides.
    pub evals: usize,
}

impl IdentityReport {
    /// Compares `lhs` with `rhs`; relative error is taken against `|lhs|`.
    pub fn compare(
        id: IdentityId,
        params: Vec<(String, ComplexValue)>,
        lhs: ComplexValue,
        rhs: ComplexValue,
        tol: &Tolerance,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        let scale = lhs.norm();
        let rel_err = if scale > 0.0 {
            abs_err / scale
        } else if abs_err == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        let finite = abs_err.is_finite();
        let pass = finite && (abs_err <= tol.abs_tol || rel_err <= tol.rel_tol);
        IdentityReport { id, params, lhs, rhs, abs_err, rel_err, pass, terms: 0, evals: 0 }
    }

    pub fn with_costs(mut self, terms: usize, evals: usize) -> Self {
        self.terms = terms;
        self.evals = evals;
        self
    }
}

/// `[(name, value)]` from borrowed names.
pub fn params(pairs: &[(&str, ComplexValue)]) -> Vec<(String, ComplexValue)> {
    pairs.iter().map(|(k, v)| (String::from(*k), *v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::from_name(id.name()), Some(id));
        }
        assert_eq!(IdentityId::from_name("nope"), None);
    }

    #[test]
    fn pass_is_either_tolerance() {
        let tol = Tolerance::uniform(1e-9).with_abs(1e-12);
        let one = ComplexValue::new(1.0, 0.0);
        let r = IdentityReport::compare(IdentityId::Wigert, params(&[]), one * 1e6, one * (1e6 + 1e-4), &tol);
        assert!(r.pass && r.abs_err > tol.abs_tol);
        let r = IdentityReport::compare(IdentityId::Wigert, params(&[]), one * 1e-20, one * 2e-20, &tol);
        assert!(r.pass && r.rel_err > tol.rel_tol);
        let r = IdentityReport::compare(IdentityId::Wigert, params(&[]), one, one * 1.1, &tol);
        assert!(!r.pass);
    }
}
