//! Convergence suites over a shrinking `δ` grid.

use alloc::vec::Vec;

use crate::error::Result;
use crate::numerics::{ComplexValue, Tolerance};
use crate::report::{params, IdentityId, IdentityReport};

use super::{
    cauchy_shrinks, extract_constant, mirrored_moment, smoothed_moment, sw2nd_calibration, MomentParams, MomentReport,
};

/// Largest allowed `|∫ζ(½+it)ζ′(½−it)e^{−δt}dt − conj(moment)|`.
pub const CONJUGATE_TOL: f64 = 1e-10;
/// Largest allowed relative change when `t_cap` doubles.
pub const T_CAP_DRIFT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    /// `|ζ(½+it)|²`.
    SecondMoment,
    /// `ζ(½−it)ζ′(½+it)`.
    ZetaMoment,
}

impl SuiteKind {
    pub fn id(self) -> IdentityId {
        match self {
            SuiteKind::SecondMoment => IdentityId::SecondMoment,
            SuiteKind::ZetaMoment => IdentityId::ZetaMoment,
        }
    }
}

/// Residuals over a grid plus the side checks run at its coarsest `δ`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSuite {
    pub kind: SuiteKind,
    pub reports: Vec<MomentReport>,
    /// Successive residual differences shrink.
    pub cauchy: bool,
    /// Richardson estimate of the residual limit from the two finest `δ`.
    pub constant: Option<ComplexValue>,
    /// The same for residuals against the exact singular part.
    pub singular_constant: Option<ComplexValue>,
    /// Mirrored-integrand error; `ZetaMoment` only.
    pub conjugate_err: Option<f64>,
    /// Relative change on doubling `t_cap`.
    pub t_cap_drift: f64,
}

impl MomentSuite {
    pub fn pass(&self) -> bool {
        self.cauchy && self.conjugate_err.is_none_or(|e| e <= CONJUGATE_TOL) && self.t_cap_drift <= T_CAP_DRIFT_TOL
    }

    pub fn residuals(&self) -> Vec<ComplexValue> {
        self.reports.iter().map(|r| r.residual).collect()
    }

    /// One row per `δ`: integral against main term, with the suite verdict.
    pub fn identity_reports(&self) -> Vec<IdentityReport> {
        let pass = self.pass();
        let tol = Tolerance::default();
        self.reports
            .iter()
            .map(|r| {
                let mut row = IdentityReport::compare(
                    self.kind.id(),
                    params(&[("delta", ComplexValue::new(r.delta, 0.0))]),
                    r.integral,
                    r.leading,
                    &tol,
                )
                .with_costs(0, r.evals);
                row.pass = pass;
                row
            })
            .collect()
    }
}

fn run(kind: SuiteKind, p: &MomentParams) -> Result<MomentReport> {
    match kind {
        SuiteKind::SecondMoment => sw2nd_calibration(p),
        SuiteKind::ZetaMoment => smoothed_moment(p),
    }
}

/// Residuals at each `δ` in order, then the conjugate and cutoff checks at
/// the first one.
pub fn moment_suite(kind: SuiteKind, deltas: &[f64], tol: &Tolerance) -> Result<MomentSuite> {
    let mut reports = Vec::with_capacity(deltas.len());
    for &d in deltas {
        reports.push(run(kind, &MomentParams::new(d, *tol)?)?);
    }
    let residuals: Vec<ComplexValue> = reports.iter().map(|r| r.residual).collect();
    let singular: Vec<ComplexValue> = reports.iter().map(|r| r.singular_residual).collect();
    let (mut conjugate_err, mut t_cap_drift) = (None, 0.0);
    if let Some(first) = reports.first() {
        let base = MomentParams::new(first.delta, *tol)?;
        if kind == SuiteKind::ZetaMoment {
            let mirrored = mirrored_moment(&base)?;
            conjugate_err = Some((mirrored.value - first.integral.conj()).norm());
        }
        let wide = run(kind, &base.with_t_cap(2.0 * base.t_cap)?)?;
        t_cap_drift = (wide.integral - first.integral).norm() / first.integral.norm();
    }
    Ok(MomentSuite {
        kind,
        cauchy: cauchy_shrinks(&residuals),
        constant: extract_constant(&residuals),
        singular_constant: extract_constant(&singular),
        reports,
        conjugate_err,
        t_cap_drift,
    })
}
