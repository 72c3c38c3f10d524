//! Identity selection, default grids, precondition checks and execution of
//! single parameter points.

use std::time::Instant;

use core::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use loglambert_core::kloosterman::{
    digamma_series_check, kernel_integral_check, kernel_sum_check, kloosterman_line_check, log_kernel_sum_check,
    ml_derivative_check, psi1_asymptotic_check, LineIntegralSpec,
};
use loglambert_core::lambert::{
    divisor_form_check, lambert_asymptotic_check, lambert_log_alt_check, lambert_log_check, ramanujan_check,
    sigma_lambert_check, wigert_check, LambertParams, SigmaTail, MAX_EXPANSION_ORDER,
};
use loglambert_core::moments::{moment_suite, rotated_series_check, SuiteKind};
use loglambert_core::report::{params, IdentityId, IdentityReport};
use loglambert_core::{ComplexValue, Tolerance};

use crate::error::CliError;
use crate::rows::{Params, Row};

/// Selector aliases kept for external scripts; canonical names come from
/// [`IdentityId::name`].
const ALIASES: &[(&str, IdentityId)] = &[
    ("thm1.1", IdentityId::LambertLog),
    ("thm1.2", IdentityId::LambertAsymptotic),
    ("thm3.1", IdentityId::Psi1Asymptotic),
];

pub fn resolve_identity(selector: &str) -> Result<IdentityId, CliError> {
    let key = selector.trim().to_ascii_lowercase();
    IdentityId::from_name(&key).or_else(|| ALIASES.iter().find(|(a, _)| *a == key).map(|(_, id)| *id)).ok_or_else(
        || {
            let names: Vec<&str> = IdentityId::ALL.iter().map(|id| id.name()).collect();
            CliError::usage(format!("unknown identity {selector:?}; known: {}", names.join(", ")))
        },
    )
}

/// Criterion-level default tolerance of each identity.
pub fn default_tolerance(id: IdentityId) -> Tolerance {
    let absolute = |t: f64| Tolerance { abs_tol: t, rel_tol: 0.0, ..Tolerance::default() };
    match id {
        IdentityId::LambertLog => Tolerance::relative(1e-9),
        IdentityId::LambertLogAlt => Tolerance::relative(1e-8),
        IdentityId::Wigert | IdentityId::Ramanujan => Tolerance::relative(1e-10),
        IdentityId::SigmaLambert => Tolerance::relative(1e-6),
        IdentityId::DivisorForm => Tolerance::relative(1e-12),
        IdentityId::LogKernelSum => absolute(1e-6),
        IdentityId::KernelSum
        | IdentityId::KloostermanLine
        | IdentityId::MlDerivative
        | IdentityId::KernelIntegral
        | IdentityId::DigammaSeries
        | IdentityId::RotatedSeries => absolute(1e-8),
        IdentityId::SecondMoment | IdentityId::ZetaMoment => Tolerance::uniform(1e-12),
        // both compare against their own truncation error
        IdentityId::LambertAsymptotic | IdentityId::Psi1Asymptotic => Tolerance::default(),
    }
}

/// Overrides applied on top of [`default_tolerance`].
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ToleranceOverride {
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub max_terms: Option<usize>,
    pub max_evals: Option<usize>,
}

impl ToleranceOverride {
    pub fn apply(&self, base: Tolerance) -> Result<Tolerance, CliError> {
        let t = Tolerance {
            abs_tol: self.abs_tol.unwrap_or(base.abs_tol),
            rel_tol: self.rel_tol.unwrap_or(base.rel_tol),
            max_terms: self.max_terms.unwrap_or(base.max_terms),
            max_evals: self.max_evals.unwrap_or(base.max_evals),
        };
        Tolerance::new(t.abs_tol, t.rel_tol, t.max_terms, t.max_evals).map_err(|e| CliError::usage(e.to_string()))
    }
}

/// User-supplied parameter lists; empty lists fall back to the defaults.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GridSpec {
    pub y: Vec<ComplexValue>,
    pub w: Vec<ComplexValue>,
    pub z: Vec<ComplexValue>,
    pub a: Vec<ComplexValue>,
    pub m: Vec<i64>,
    pub alpha: Vec<f64>,
    pub k: Vec<i64>,
    pub c: Vec<f64>,
    pub delta: Vec<f64>,
}

/// One unit of work. Moment suites produce one row per `δ`.
#[derive(Debug, Clone, PartialEq)]
pub enum Task {
    Lambert { id: IdentityId, y: ComplexValue, tol: Tolerance },
    Ramanujan { m: i32, alpha: f64, tol: Tolerance },
    Sigma { a: ComplexValue, y: ComplexValue, tol: Tolerance },
    Asymptotic { y: ComplexValue, order: usize, max_terms: usize },
    Kernel { id: IdentityId, w: ComplexValue, tol: Tolerance },
    Line { z: ComplexValue, c: f64, tol: Tolerance },
    Psi1 { z: ComplexValue },
    Moment { kind: SuiteKind, deltas: Vec<f64>, tol: Tolerance },
    Rotated { delta: f64, tol: Tolerance },
}

fn real(x: f64) -> ComplexValue {
    ComplexValue::new(x, 0.0)
}

fn or_default<T: Clone>(given: &[T], fallback: &[T]) -> Vec<T> {
    if given.is_empty() {
        fallback.to_vec()
    } else {
        given.to_vec()
    }
}

fn points(id: IdentityId, grid: &GridSpec) -> Vec<ComplexValue> {
    use IdentityId::*;
    match id {
        LambertLog | LambertLogAlt => {
            or_default(&grid.y, &[real(1.0), real(0.5), ComplexValue::new(3.0, 2.0), ComplexValue::new(0.3, 0.2)])
        }
        Wigert => or_default(&grid.y, &[real(1.0), real(TAU), ComplexValue::new(5.0, 3.0)]),
        DivisorForm => or_default(&grid.y, &[real(1.0), real(2.0), real(0.5)]),
        KernelSum => or_default(&grid.w, &[real(1.0), real(2.0), ComplexValue::new(1.0, 1.0)]),
        LogKernelSum => or_default(&grid.w, &[real(1.0), real(2.0)]),
        MlDerivative | KernelIntegral | DigammaSeries => or_default(&grid.w, &[real(0.5), real(1.0), real(2.0)]),
        KloostermanLine => or_default(&grid.z, &[real(2.0), ComplexValue::new(1.0, 1.0)]),
        Psi1Asymptotic => {
            or_default(&grid.z, &[ComplexValue::new(0.0, 20.0), ComplexValue::new(-15.0, 15.0), real(30.0)])
        }
        _ => Vec::new(),
    }
}

/// Tasks for `id` over the user grid, or over its default grid.
pub fn tasks_for(id: IdentityId, grid: &GridSpec, tol: &ToleranceOverride) -> Result<Vec<Task>, CliError> {
    use IdentityId::*;
    let t = tol.apply(default_tolerance(id))?;
    let mut out = Vec::new();
    match id {
        LambertLog | LambertLogAlt | Wigert | DivisorForm => {
            out.extend(points(id, grid).into_iter().map(|y| Task::Lambert { id, y, tol: t }));
        }
        Ramanujan => {
            if grid.m.is_empty() && grid.alpha.is_empty() {
                out.push(Task::Ramanujan { m: 1, alpha: PI, tol: t });
                out.push(Task::Ramanujan { m: 2, alpha: FRAC_PI_2, tol: t });
            } else {
                for &m in &or_default(&grid.m, &[1]) {
                    let m = i32::try_from(m).map_err(|_| CliError::usage(format!("m = {m} is out of range")))?;
                    for &alpha in &or_default(&grid.alpha, &[PI]) {
                        out.push(Task::Ramanujan { m, alpha, tol: t });
                    }
                }
            }
        }
        SigmaLambert => {
            for a in or_default(&grid.a, &[real(0.5), real(1.5)]) {
                for y in or_default(&grid.y, &[real(8.0)]) {
                    out.push(Task::Sigma { a, y, tol: t });
                }
            }
        }
        LambertAsymptotic => {
            for y in or_default(&grid.y, &[real(0.05)]) {
                for k in or_default(&grid.k, &[3]) {
                    let order = usize::try_from(k).map_err(|_| CliError::usage(format!("K = {k} must be positive")))?;
                    out.push(Task::Asymptotic { y, order, max_terms: tol.max_terms.unwrap_or(10_000_000) });
                }
            }
        }
        KernelSum | LogKernelSum | MlDerivative | KernelIntegral | DigammaSeries => {
            out.extend(points(id, grid).into_iter().map(|w| Task::Kernel { id, w, tol: t }));
        }
        KloostermanLine => {
            for z in points(id, grid) {
                for &c in &or_default(&grid.c, &[0.3, 0.5, 0.7]) {
                    out.push(Task::Line { z, c, tol: t });
                }
            }
        }
        Psi1Asymptotic => out.extend(points(id, grid).into_iter().map(|z| Task::Psi1 { z })),
        SecondMoment | ZetaMoment => {
            let kind = if id == SecondMoment { SuiteKind::SecondMoment } else { SuiteKind::ZetaMoment };
            out.push(Task::Moment { kind, deltas: or_default(&grid.delta, &[0.4, 0.2, 0.1]), tol: t });
        }
        RotatedSeries => {
            out.extend(or_default(&grid.delta, &[0.3]).into_iter().map(|delta| Task::Rotated { delta, tol: t }));
        }
    }
    for task in &out {
        task.validate()?;
    }
    Ok(out)
}

fn right_half(name: &str, v: ComplexValue) -> Result<(), String> {
    if v.re > 0.0 {
        Ok(())
    } else {
        Err(format!("Re({name}) must be positive, got {},{}", v.re, v.im))
    }
}

fn delta_range(delta: f64) -> Result<(), String> {
    if delta > 0.0 && delta < FRAC_PI_2 {
        Ok(())
    } else {
        Err(format!("delta must lie in (0, pi/2) so that sin(delta/2) stays in range, got {delta}"))
    }
}

impl Task {
    pub fn id(&self) -> IdentityId {
        match self {
            Task::Lambert { id, .. } | Task::Kernel { id, .. } => *id,
            Task::Ramanujan { .. } => IdentityId::Ramanujan,
            Task::Sigma { .. } => IdentityId::SigmaLambert,
            Task::Asymptotic { .. } => IdentityId::LambertAsymptotic,
            Task::Line { .. } => IdentityId::KloostermanLine,
            Task::Psi1 { .. } => IdentityId::Psi1Asymptotic,
            Task::Moment { kind, .. } => kind.id(),
            Task::Rotated { .. } => IdentityId::RotatedSeries,
        }
    }

    /// Parameters as they appear in report rows.
    pub fn params(&self) -> Params {
        let p = match self {
            Task::Lambert { y, .. } => params(&[("y", *y)]),
            Task::Ramanujan { m, alpha, .. } => params(&[("m", real(*m as f64)), ("alpha", real(*alpha))]),
            Task::Sigma { a, y, .. } => params(&[("a", *a), ("y", *y)]),
            Task::Asymptotic { y, order, .. } => params(&[("y", *y), ("K", real(*order as f64))]),
            Task::Kernel { w, .. } => params(&[("w", *w)]),
            Task::Line { z, c, .. } => params(&[("z", *z), ("c", real(*c))]),
            Task::Psi1 { z } => params(&[("z", *z)]),
            Task::Moment { .. } => Vec::new(),
            Task::Rotated { delta, .. } => params(&[("delta", real(*delta))]),
        };
        Params::from_pairs(&p)
    }

    /// Preconditions checked before any work starts.
    pub fn validate(&self) -> Result<(), CliError> {
        let check = match self {
            Task::Lambert { y, .. } => right_half("y", *y),
            Task::Ramanujan { m, alpha, .. } => {
                if *m == 0 {
                    Err("m must be nonzero".into())
                } else if !(*alpha > 0.0) {
                    Err(format!("alpha must be positive, got {alpha}"))
                } else {
                    Ok(())
                }
            }
            Task::Sigma { a, y, .. } => right_half("y", *y).and_then(|_| {
                let even = a.im == 0.0 && a.re.fract() == 0.0 && a.re % 2.0 == 0.0;
                if !(a.re > -1.0) || even {
                    Err(format!("a must satisfy Re(a) > -1 and not be an even integer, got {},{}", a.re, a.im))
                } else {
                    Ok(())
                }
            }),
            Task::Asymptotic { y, order, .. } => right_half("y", *y).and_then(|_| {
                if (1..=MAX_EXPANSION_ORDER).contains(order) {
                    Ok(())
                } else {
                    Err(format!("K must lie in 1..={MAX_EXPANSION_ORDER}, got {order}"))
                }
            }),
            Task::Kernel { w, .. } => right_half("w", *w),
            Task::Line { z, c, .. } => {
                if z.im == 0.0 && z.re <= 0.0 {
                    Err(format!("z must avoid the cut (-inf, 0], got {},{}", z.re, z.im))
                } else if !(*c > 0.0 && *c < 1.0) {
                    Err(format!("c must lie in (0, 1), got {c}"))
                } else {
                    Ok(())
                }
            }
            Task::Psi1 { z } => {
                if z.norm() >= 2.0 {
                    Ok(())
                } else {
                    Err(format!("|z| must be at least 2, got {},{}", z.re, z.im))
                }
            }
            Task::Moment { deltas, .. } => {
                if deltas.is_empty() {
                    Err("empty delta grid".into())
                } else {
                    deltas.iter().try_for_each(|d| delta_range(*d))
                }
            }
            Task::Rotated { delta, .. } => delta_range(*delta),
        };
        check.map_err(|msg| CliError::usage(format!("{}: {msg}", self.id().name())))
    }

    fn reports(&self) -> Result<Vec<IdentityReport>, loglambert_core::Error> {
        let one = |r: IdentityReport| vec![r];
        Ok(match self {
            Task::Lambert { id, y, tol } => {
                let p = LambertParams::new(*y, *tol)?;
                one(match id {
                    IdentityId::LambertLog => lambert_log_check(&p)?,
                    IdentityId::LambertLogAlt => lambert_log_alt_check(&p)?,
                    IdentityId::Wigert => wigert_check(&p)?,
                    _ => divisor_form_check(&p)?,
                })
            }
            Task::Ramanujan { m, alpha, tol } => one(ramanujan_check(*m, *alpha, tol)?),
            Task::Sigma { a, y, tol } => {
                one(sigma_lambert_check(*a, &LambertParams::new(*y, *tol)?, SigmaTail::Asymptotic)?)
            }
            Task::Asymptotic { y, order, max_terms } => one(lambert_asymptotic_check(*y, *order, *max_terms)?),
            Task::Kernel { id, w, tol } => one(match id {
                IdentityId::KernelSum => kernel_sum_check(*w, tol)?,
                IdentityId::LogKernelSum => log_kernel_sum_check(*w, tol)?,
                IdentityId::MlDerivative => ml_derivative_check(*w, tol)?,
                IdentityId::KernelIntegral => kernel_integral_check(*w, tol)?,
                _ => digamma_series_check(*w, tol)?,
            }),
            Task::Line { z, c, tol } => one(kloosterman_line_check(*z, &LineIntegralSpec::new(*c, 40.0, *tol)?)?),
            Task::Psi1 { z } => one(psi1_asymptotic_check(*z)?),
            Task::Moment { kind, deltas, tol } => moment_suite(*kind, deltas, tol)?.identity_reports(),
            Task::Rotated { delta, tol } => one(rotated_series_check(*delta, tol)?),
        })
    }

    /// Report rows; a numerical failure becomes a failed row. `wall_ms` is
    /// filled only when `timing` is set so reports stay reproducible.
    pub fn run(&self, timing: bool) -> Vec<Row> {
        let start = Instant::now();
        let mut rows = match self.reports() {
            Ok(reports) => reports.iter().map(Row::from_report).collect(),
            Err(e) => vec![Row::failed(self.id(), self.params(), e.to_string())],
        };
        if timing {
            let ms = start.elapsed().as_millis() as u64;
            rows.iter_mut().for_each(|r| r.wall_ms = ms);
        }
        rows
    }
}

/// `count` random points for `id`, drawn from a region where its
/// preconditions hold. Each identity draws from its own stream derived from
/// `seed`, so adding identities never shifts another's points.
pub fn random_tasks(id: IdentityId, count: usize, seed: u64, tol: &ToleranceOverride) -> Result<Vec<Task>, CliError> {
    use IdentityId::*;
    let stream = IdentityId::ALL.iter().position(|x| *x == id).unwrap_or(0) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let t = tol.apply(default_tolerance(id))?;
    let rng = &mut rng;
    fn draw(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
        rng.random_range(lo..hi)
    }
    fn cx(rng: &mut ChaCha8Rng, re: (f64, f64), im: (f64, f64)) -> ComplexValue {
        let x = draw(rng, re.0, re.1);
        ComplexValue::new(x, draw(rng, im.0, im.1))
    }
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let task = match id {
            LambertLog | LambertLogAlt | Wigert | DivisorForm => {
                Task::Lambert { id, y: cx(rng, (0.4, 4.0), (-3.0, 3.0)), tol: t }
            }
            SigmaLambert => {
                let a = real(draw(rng, 0.1, 1.9));
                Task::Sigma { a, y: cx(rng, (4.0, 10.0), (-2.0, 2.0)), tol: t }
            }
            LambertAsymptotic => {
                let y = real(draw(rng, 0.05, 0.2));
                Task::Asymptotic { y, order: 2, max_terms: tol.max_terms.unwrap_or(10_000_000) }
            }
            KernelSum | MlDerivative | KernelIntegral | DigammaSeries => {
                Task::Kernel { id, w: cx(rng, (0.3, 3.0), (-1.0, 1.0)), tol: t }
            }
            LogKernelSum => Task::Kernel { id, w: real(draw(rng, 0.8, 2.5)), tol: t },
            KloostermanLine => Task::Line { z: cx(rng, (-2.0, 3.0), (0.3, 2.0)), c: 0.5, tol: t },
            Psi1Asymptotic => Task::Psi1 { z: ComplexValue::from_polar(draw(rng, 20.0, 40.0), draw(rng, -2.5, 2.5)) },
            Ramanujan => {
                let m = [1, 2, 3, -1, -2][(draw(rng, 0.0, 5.0) as usize).min(4)];
                Task::Ramanujan { m, alpha: draw(rng, 0.5, 3.0), tol: t }
            }
            RotatedSeries => Task::Rotated { delta: draw(rng, 0.1, 1.2), tol: t },
            // suites run over their δ grid only
            SecondMoment | ZetaMoment => return Ok(Vec::new()),
        };
        task.validate()?;
        out.push(task);
    }
    Ok(out)
}
