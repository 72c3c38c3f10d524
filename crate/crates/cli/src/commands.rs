//! The five subcommands. Each writes its records to a [`Sink`] and returns
//! whether every record passed; usage problems surface as [`CliError::Usage`]
//! before any computation starts.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use loglambert_core::kloosterman::log_kernel_sum_lhs;
use loglambert_core::lambert::{
    asymptotic_logy0, lambert_asymptotic_check, lambert_log_lhs, lambert_plain, LambertParams, MAX_EXPANSION_ORDER,
};
use loglambert_core::moments::{
    cauchy_shrinks, moment_suite, phi_remainder, rotated_series_route, MomentReport, MomentSuite, SuiteKind,
};
use loglambert_core::report::IdentityId;
use loglambert_core::special::{
    digamma, exp_integral_ei, ml_d2b_at1, psi1, psi1_asymptotic, psi1_reference, shi_chi, sinhshi_minus_coshchi, zeta,
    zeta_prime, D2bMode,
};
use loglambert_core::{ComplexValue, Tolerance};

use crate::error::CliError;
use crate::rows::{number, Complex, Record};
use crate::runner::run_tasks;
use crate::sink::Sink;
use crate::tasks::{random_tasks, tasks_for, GridSpec, Task, ToleranceOverride};

fn opt(x: Option<f64>) -> String {
    x.map(number).unwrap_or_default()
}

fn opt_c(z: Option<Complex>) -> [String; 2] {
    [opt(z.map(|c| c.re)), opt(z.map(|c| c.im))]
}

// ---------------------------------------------------------------- verify

/// Identity selection and sampling for `verify`.
#[derive(Debug, Clone, Default)]
pub struct VerifyPlan {
    pub identities: Vec<IdentityId>,
    pub grid: GridSpec,
    /// `(count, seed)`: random points replace the grid.
    pub random: Option<(usize, u64)>,
    pub tol: ToleranceOverride,
}

impl VerifyPlan {
    pub fn tasks(&self) -> Result<Vec<Task>, CliError> {
        if self.identities.is_empty() {
            return Err(CliError::usage("no identity selected (use --identity NAME or --all)"));
        }
        let mut out = Vec::new();
        for &id in &self.identities {
            match self.random {
                Some((count, seed)) => out.extend(random_tasks(id, count, seed, &self.tol)?),
                None => out.extend(tasks_for(id, &self.grid, &self.tol)?),
            }
        }
        Ok(out)
    }
}

pub fn verify<W: Write>(plan: &VerifyPlan, threads: usize, timing: bool, sink: &mut Sink<W>) -> Result<bool, CliError> {
    let tasks = plan.tasks()?;
    run_tasks(&tasks, threads, timing, sink)
}

// ---------------------------------------------------------------- eval

/// Functions `eval` can tabulate.
pub const EVAL_FUNCTIONS: &[&str] = &[
    "zeta",
    "zeta-prime",
    "digamma",
    "psi1",
    "psi1-reference",
    "shi",
    "chi",
    "ei",
    "kernel",
    "ml-d2b",
    "lambert-log",
    "lambert-plain",
    "log-kernel-sum",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRow {
    pub function: String,
    pub z: Complex,
    pub value: Option<Complex>,
    pub error: Option<String>,
}

impl Record for EvalRow {
    fn columns() -> &'static [&'static str] {
        &["function", "z_re", "z_im", "value_re", "value_im", "error"]
    }

    fn fields(&self) -> Vec<String> {
        let [vr, vi] = opt_c(self.value);
        vec![
            self.function.clone(),
            number(self.z.re),
            number(self.z.im),
            vr,
            vi,
            self.error.clone().unwrap_or_default(),
        ]
    }
}

pub fn check_function(name: &str) -> Result<(), CliError> {
    if EVAL_FUNCTIONS.contains(&name) {
        Ok(())
    } else {
        Err(CliError::usage(format!("unknown function {name:?}; known: {}", EVAL_FUNCTIONS.join(", "))))
    }
}

fn evaluate(name: &str, z: ComplexValue, tol: &Tolerance) -> Result<ComplexValue, loglambert_core::Error> {
    Ok(match name {
        "zeta" => zeta(z)?,
        "zeta-prime" => zeta_prime(z)?,
        "digamma" => digamma(z)?,
        "psi1" => psi1(z)?,
        "psi1-reference" => psi1_reference(z)?,
        "shi" => shi_chi(z)?.0,
        "chi" => shi_chi(z)?.1,
        "ei" => {
            if z.im != 0.0 {
                return Err(loglambert_core::Error::Domain("ei takes a real argument".into()));
            }
            ComplexValue::new(exp_integral_ei(z.re)?, 0.0)
        }
        "kernel" => sinhshi_minus_coshchi(z)?,
        "ml-d2b" => ml_d2b_at1(z, D2bMode::Series)?,
        "lambert-log" => lambert_log_lhs(&LambertParams::new(z, *tol)?)?.value,
        "lambert-plain" => lambert_plain(&LambertParams::new(z, *tol)?)?.value,
        _ => log_kernel_sum_lhs(z, tol, None)?.value,
    })
}

pub fn eval<W: Write>(
    function: &str,
    points: &[ComplexValue],
    tol: &Tolerance,
    sink: &mut Sink<W>,
) -> Result<bool, CliError> {
    check_function(function)?;
    if points.is_empty() {
        return Err(CliError::usage("eval needs at least one --z point"));
    }
    let mut ok = true;
    for &z in points {
        let row = match evaluate(function, z, tol) {
            Ok(v) => EvalRow { function: function.into(), z: z.into(), value: Some(v.into()), error: None },
            Err(e) => {
                ok = false;
                EvalRow { function: function.into(), z: z.into(), value: None, error: Some(e.to_string()) }
            }
        };
        sink.write(&row)?;
    }
    Ok(ok)
}

// ---------------------------------------------------------------- asympt

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptTarget {
    /// Small-`y` expansion of the log-Lambert sum.
    LambertSmallY,
    /// Large-`z` expansion of ψ₁.
    Psi1LargeZ,
}

impl AsymptTarget {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text.trim().to_ascii_lowercase().as_str() {
            "thm1.2" | "lambert-asymptotic" => Ok(AsymptTarget::LambertSmallY),
            "thm3.1" | "psi1-asymptotic" => Ok(AsymptTarget::Psi1LargeZ),
            other => Err(CliError::usage(format!("unknown target {other:?} (thm1.2 or thm3.1)"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AsymptTarget::LambertSmallY => "lambert-asymptotic",
            AsymptTarget::Psi1LargeZ => "psi1-asymptotic",
        }
    }

    pub fn default_points(self) -> Vec<ComplexValue> {
        match self {
            AsymptTarget::LambertSmallY => vec![ComplexValue::new(0.05, 0.0)],
            AsymptTarget::Psi1LargeZ => vec![ComplexValue::new(0.0, 25.0)],
        }
    }

    pub fn default_orders(self) -> Vec<usize> {
        match self {
            AsymptTarget::LambertSmallY => (1..=4).collect(),
            AsymptTarget::Psi1LargeZ => (1..=6).collect(),
        }
    }
}

/// One `(point, K)` cell of an asymptotic sweep. `within` holds when the
/// difference is explained by the omitted terms: ten times the first one for
/// the Lambert expansion, twice it for ψ₁, plus binary64 resolution of the
/// direct value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptRow {
    pub target: &'static str,
    pub point: Complex,
    pub order: usize,
    pub direct: Option<Complex>,
    pub expansion: Option<Complex>,
    pub diff: Option<f64>,
    pub next_term: Option<f64>,
    pub within: bool,
    pub error: Option<String>,
}

impl Record for AsymptRow {
    fn columns() -> &'static [&'static str] {
        &[
            "target",
            "point_re",
            "point_im",
            "order",
            "direct_re",
            "direct_im",
            "expansion_re",
            "expansion_im",
            "diff",
            "next_term",
            "within",
            "error",
        ]
    }

    fn fields(&self) -> Vec<String> {
        let [dr, di] = opt_c(self.direct);
        let [er, ei] = opt_c(self.expansion);
        vec![
            self.target.into(),
            number(self.point.re),
            number(self.point.im),
            self.order.to_string(),
            dr,
            di,
            er,
            ei,
            opt(self.diff),
            opt(self.next_term),
            self.within.to_string(),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

fn check_asympt_point(target: AsymptTarget, p: ComplexValue, order: usize) -> Result<(), CliError> {
    match target {
        AsymptTarget::LambertSmallY => {
            if !(p.re > 0.0) {
                return Err(CliError::usage(format!("Re(y) must be positive, got {},{}", p.re, p.im)));
            }
            if !(1..=MAX_EXPANSION_ORDER).contains(&order) {
                return Err(CliError::usage(format!("K must lie in 1..={MAX_EXPANSION_ORDER}, got {order}")));
            }
        }
        AsymptTarget::Psi1LargeZ => {
            if p.norm() < 2.0 || (p.im == 0.0 && p.re <= 0.0) {
                return Err(CliError::usage(format!("z must satisfy |z| >= 2 off the cut, got {},{}", p.re, p.im)));
            }
            if order == 0 {
                return Err(CliError::usage("K must be positive"));
            }
        }
    }
    Ok(())
}

fn asympt_cell(
    target: AsymptTarget,
    p: ComplexValue,
    order: usize,
    max_terms: usize,
) -> loglambert_core::Result<AsymptRow> {
    let (direct, expansion, diff, next, bound) = match target {
        AsymptTarget::LambertSmallY => {
            let r = lambert_asymptotic_check(p, order, max_terms)?;
            let next = asymptotic_logy0(p, order)?.next_term.norm();
            (r.lhs, r.rhs, r.abs_err, next, 10.0 * next)
        }
        AsymptTarget::Psi1LargeZ => {
            let direct = psi1_reference(p)?;
            let t = psi1_asymptotic(p, order)?;
            let resolution = 64.0 * f64::EPSILON * direct.norm();
            (direct, t.value, (direct - t.value).norm(), t.first_omitted, 2.0 * t.first_omitted + resolution)
        }
    };
    Ok(AsymptRow {
        target: target.name(),
        point: p.into(),
        order,
        direct: Some(direct.into()),
        expansion: Some(expansion.into()),
        diff: Some(diff),
        next_term: Some(next),
        within: diff <= bound,
        error: None,
    })
}

pub fn asympt<W: Write>(
    target: AsymptTarget,
    points: &[ComplexValue],
    orders: &[usize],
    max_terms: usize,
    sink: &mut Sink<W>,
) -> Result<bool, CliError> {
    if points.is_empty() || orders.is_empty() {
        return Err(CliError::usage("empty asymptotic grid"));
    }
    for &p in points {
        for &k in orders {
            check_asympt_point(target, p, k)?;
        }
    }
    let mut ok = true;
    for &p in points {
        for &k in orders {
            let row = asympt_cell(target, p, k, max_terms).unwrap_or_else(|e| AsymptRow {
                target: target.name(),
                point: p.into(),
                order: k,
                direct: None,
                expansion: None,
                diff: None,
                next_term: None,
                within: false,
                error: Some(e.to_string()),
            });
            ok &= row.within;
            sink.write(&row)?;
        }
    }
    Ok(ok)
}

// ---------------------------------------------------------------- moment

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentRow {
    pub delta: f64,
    pub t_cap: f64,
    pub integral: Complex,
    pub leading: Complex,
    pub residual: Complex,
    pub singular_residual: Complex,
    pub err_estimate: f64,
    pub evals: usize,
    /// `πe^{−iδ/2}` times the rotated divisor-log series.
    pub rotated: Option<Complex>,
    /// Integral plus the rotated series and its closed-form companion.
    pub phi: Option<Complex>,
}

impl MomentRow {
    fn new(r: &MomentReport) -> Self {
        MomentRow {
            delta: r.delta,
            t_cap: r.t_cap,
            integral: r.integral.into(),
            leading: r.leading.into(),
            residual: r.residual.into(),
            singular_residual: r.singular_residual.into(),
            err_estimate: r.err_estimate,
            evals: r.evals,
            rotated: None,
            phi: None,
        }
    }
}

impl Record for MomentRow {
    fn columns() -> &'static [&'static str] {
        &[
            "delta",
            "t_cap",
            "integral_re",
            "integral_im",
            "leading_re",
            "leading_im",
            "residual_re",
            "residual_im",
            "singular_residual_re",
            "singular_residual_im",
            "err_estimate",
            "evals",
            "rotated_re",
            "rotated_im",
            "phi_re",
            "phi_im",
        ]
    }

    fn fields(&self) -> Vec<String> {
        let [rr, ri] = opt_c(self.rotated);
        let [pr, pi] = opt_c(self.phi);
        vec![
            number(self.delta),
            number(self.t_cap),
            number(self.integral.re),
            number(self.integral.im),
            number(self.leading.re),
            number(self.leading.im),
            number(self.residual.re),
            number(self.residual.im),
            number(self.singular_residual.re),
            number(self.singular_residual.im),
            number(self.err_estimate),
            self.evals.to_string(),
            rr,
            ri,
            pr,
            pi,
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentPlan {
    pub deltas: Vec<f64>,
    pub calibrate: bool,
    pub rotated: bool,
    pub tol: Tolerance,
}

/// What `moment` found besides its rows.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentOutcome {
    pub calibration: Option<MomentSuite>,
    pub suite: Option<MomentSuite>,
    pub rotated_cauchy: Option<bool>,
}

impl MomentOutcome {
    pub fn pass(&self) -> bool {
        self.calibration.as_ref().is_none_or(MomentSuite::pass)
            && self.suite.as_ref().is_some_and(MomentSuite::pass)
            && self.rotated_cauchy.unwrap_or(true)
    }

    /// Human-readable summary for stderr.
    pub fn summary(&self) -> String {
        let mut lines = Vec::new();
        let c = |z: Option<ComplexValue>| z.map_or("n/a".to_string(), |z| format!("{:.6}{:+.6}i", z.re, z.im));
        let describe = |label: &str, s: &MomentSuite, lines: &mut Vec<String>| {
            lines.push(format!(
                "{label}: cauchy {}, extrapolated constant {}, conjugate error {}, cutoff drift {:.3e}, {}",
                match (s.reports.len(), s.cauchy) {
                    (0..=2, _) => "needs three deltas",
                    (_, true) => "shrinks",
                    (_, false) => "does not shrink",
                },
                c(s.constant),
                s.conjugate_err.map_or("n/a".into(), |e| format!("{e:.3e}")),
                s.t_cap_drift,
                if s.pass() { "PASS" } else { "FAIL" },
            ));
        };
        if let Some(s) = &self.calibration {
            describe("calibration", s, &mut lines);
            if !s.pass() {
                lines.push("calibration failed; moment run skipped".into());
            }
        }
        if let Some(s) = &self.suite {
            describe("moment", s, &mut lines);
            lines.push(format!("singular-term constant {}", c(s.singular_constant)));
        }
        if let Some(ok) = self.rotated_cauchy {
            lines.push(format!("phi differences {}", if ok { "shrink" } else { "do not shrink" }));
        }
        lines.join("\n")
    }
}

pub fn check_deltas(deltas: &[f64]) -> Result<(), CliError> {
    if deltas.is_empty() {
        return Err(CliError::usage("empty delta grid"));
    }
    for &d in deltas {
        if !(d > 0.0 && d < core::f64::consts::FRAC_PI_2) {
            return Err(CliError::usage(format!(
                "delta must lie in (0, pi/2) so that sin(delta/2) stays in range, got {d}"
            )));
        }
    }
    Ok(())
}

fn numerical(e: loglambert_core::Error) -> CliError {
    CliError::Numerical(e.to_string())
}

pub fn moment<W: Write>(plan: &MomentPlan, sink: &mut Sink<W>) -> Result<MomentOutcome, CliError> {
    check_deltas(&plan.deltas)?;
    let mut outcome = MomentOutcome { calibration: None, suite: None, rotated_cauchy: None };
    if plan.calibrate {
        let cal = moment_suite(SuiteKind::SecondMoment, &plan.deltas, &plan.tol).map_err(numerical)?;
        let ok = cal.pass();
        outcome.calibration = Some(cal);
        if !ok {
            return Ok(outcome);
        }
    }
    let suite = moment_suite(SuiteKind::ZetaMoment, &plan.deltas, &plan.tol).map_err(numerical)?;
    let mut phis = Vec::new();
    for r in &suite.reports {
        let mut row = MomentRow::new(r);
        if plan.rotated {
            let route = rotated_series_route(r.delta, &plan.tol.tightened(1.0)).map_err(numerical)?;
            let phi = phi_remainder(r, &route).map_err(numerical)?;
            row.rotated = Some(route.weighted().into());
            row.phi = Some(phi.into());
            phis.push(phi);
        }
        sink.write(&row)?;
    }
    if plan.rotated {
        // φ is smooth in δ: its successive differences must shrink
        outcome.rotated_cauchy = Some(phis.len() < 3 || cauchy_shrinks(&phis));
    }
    outcome.suite = Some(suite);
    Ok(outcome)
}

// ---------------------------------------------------------------- report

/// Per-identity summary of a `verify` report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub identity: String,
    pub rows: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub max_abs_err: Option<f64>,
    pub max_rel_err: Option<f64>,
}

impl Record for SummaryRow {
    fn columns() -> &'static [&'static str] {
        &["identity", "rows", "passed", "failed", "errors", "max_abs_err", "max_rel_err"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.identity.clone(),
            self.rows.to_string(),
            self.passed.to_string(),
            self.failed.to_string(),
            self.errors.to_string(),
            opt(self.max_abs_err),
            opt(self.max_rel_err),
        ]
    }
}

/// The fields `report` reads back from a `verify` row.
#[derive(Debug, Deserialize)]
struct StoredRow {
    identity: String,
    pass: bool,
    #[serde(default)]
    abs_err: Option<f64>,
    #[serde(default)]
    rel_err: Option<f64>,
    #[serde(default)]
    error: Option<String>,
}

fn stored_rows(text: &str) -> Result<Vec<StoredRow>, CliError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return Ok(serde_json::from_str(trimmed)?);
    }
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for record in reader.deserialize::<BTreeMap<String, String>>() {
        let r = record?;
        let get = |k: &str| r.get(k).map(String::as_str).unwrap_or("");
        let float = |k: &str| get(k).parse::<f64>().ok();
        out.push(StoredRow {
            identity: get("identity").into(),
            pass: get("pass") == "true",
            abs_err: float("abs_err"),
            rel_err: float("rel_err"),
            error: Some(get("error").to_string()).filter(|e| !e.is_empty()),
        });
    }
    Ok(out)
}

fn fold_max(acc: Option<f64>, x: Option<f64>) -> Option<f64> {
    match (acc, x) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (a, b) => a.or(b),
    }
}

/// Summarizes a JSON or CSV `verify` report, identities in first-seen order.
pub fn report<R: Read, W: Write>(mut input: R, sink: &mut Sink<W>) -> Result<bool, CliError> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let rows = stored_rows(&text)?;
    let mut order: Vec<String> = Vec::new();
    let mut by_id: BTreeMap<String, SummaryRow> = BTreeMap::new();
    for r in rows {
        let s = by_id.entry(r.identity.clone()).or_insert_with(|| {
            order.push(r.identity.clone());
            SummaryRow {
                identity: r.identity.clone(),
                rows: 0,
                passed: 0,
                failed: 0,
                errors: 0,
                max_abs_err: None,
                max_rel_err: None,
            }
        });
        s.rows += 1;
        if r.pass {
            s.passed += 1
        } else {
            s.failed += 1
        }
        s.errors += usize::from(r.error.is_some());
        s.max_abs_err = fold_max(s.max_abs_err, r.abs_err);
        s.max_rel_err = fold_max(s.max_rel_err, r.rel_err);
    }
    let mut ok = true;
    for id in order {
        let s = &by_id[&id];
        ok &= s.failed == 0;
        sink.write(s)?;
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sink::{render, Format};

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn run<F: FnOnce(&mut Sink<Vec<u8>>) -> Result<bool, CliError>>(format: Format, f: F) -> (bool, String) {
        let mut sink = Sink::new(format, Vec::new());
        let ok = f(&mut sink).unwrap();
        (ok, String::from_utf8(sink.finish().unwrap()).unwrap())
    }

    #[test]
    fn eval_tabulates_and_reports_domain_errors() {
        let (ok, text) = run(Format::Csv, |s| eval("psi1", &[c(1.0, 0.0)], &Tolerance::default(), s));
        assert!(ok);
        assert!(text.starts_with("function,z_re"));
        let (ok, text) = run(Format::Json, |s| eval("psi1", &[c(-1.0, 0.0)], &Tolerance::default(), s));
        assert!(!ok && text.contains("\"error\""));
        assert!(eval("gamma", &[c(1.0, 0.0)], &Tolerance::default(), &mut Sink::new(Format::Json, Vec::new())).is_err());
    }

    #[test]
    fn lambert_sweep_tracks_the_tail() {
        let (ok, _) =
            run(Format::Csv, |s| asympt(AsymptTarget::LambertSmallY, &[c(0.05, 0.0)], &[1, 2, 3, 4], 10_000_000, s));
        assert!(ok);
        let diffs: Vec<f64> = (1..=4)
            .map(|k| asympt_cell(AsymptTarget::LambertSmallY, c(0.05, 0.0), k, 10_000_000).unwrap().diff.unwrap())
            .collect();
        assert!(diffs.windows(2).all(|w| w[1] < w[0]), "{diffs:?}");
    }

    #[test]
    fn psi1_sweep_dips() {
        let rows: Vec<AsymptRow> =
            (1..=12).map(|k| asympt_cell(AsymptTarget::Psi1LargeZ, c(0.0, 25.0), k, 0).unwrap()).collect();
        assert!(rows.iter().all(|r| r.within));
        assert!(rows[1].diff.unwrap() < rows[0].diff.unwrap());
    }

    #[test]
    fn asympt_guards() {
        let mut sink = Sink::new(Format::Csv, Vec::new());
        assert!(asympt(AsymptTarget::LambertSmallY, &[], &[1], 10, &mut sink).is_err());
        assert!(asympt(AsymptTarget::LambertSmallY, &[c(-0.1, 0.0)], &[1], 10, &mut sink).is_err());
        assert!(asympt(AsymptTarget::Psi1LargeZ, &[c(1.0, 0.0)], &[1], 10, &mut sink).is_err());
        assert!(AsymptTarget::parse("thm9").is_err());
    }

    #[test]
    fn moment_guards() {
        assert!(check_deltas(&[4.0]).is_err());
        assert!(check_deltas(&[]).is_err());
        assert!(check_deltas(&[0.4, 0.2]).is_ok());
    }

    #[test]
    fn report_summarizes_both_formats() {
        let tol = ToleranceOverride::default();
        let plan =
            VerifyPlan { identities: vec![IdentityId::Wigert, IdentityId::Ramanujan], tol, ..Default::default() };
        let rows: Vec<_> = plan.tasks().unwrap().iter().flat_map(|t| t.run(false)).collect();
        for format in [Format::Json, Format::Csv] {
            let input = render(format, &rows).unwrap();
            let (ok, text) = run(Format::Json, |s| report(input.as_bytes(), s));
            assert!(ok);
            let parsed: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
            assert_eq!(parsed.len(), 2);
            assert_eq!(parsed[0]["identity"], "wigert");
            assert_eq!(parsed[0]["rows"], 3);
        }
    }

    #[test]
    fn verify_needs_a_selection() {
        assert!(VerifyPlan::default().tasks().is_err());
    }
}
