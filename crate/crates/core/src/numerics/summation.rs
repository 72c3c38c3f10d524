//! Kahan–Neumaier compensated accumulation.

use alloc::format;

use super::{ComplexValue, Tolerance};
use crate::error::{Error, Result};

/// Consecutive sub-tolerance terms required before a series is declared done.
pub const QUIET_TERMS: usize = 3;

/// Real Neumaier accumulator: `sum + comp` carries the running total.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub const fn new() -> Self {
        Self { sum: 0.0, comp: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Component-wise Neumaier accumulator for complex terms.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NeumaierComplex {
    re: Neumaier,
    im: Neumaier,
}

impl NeumaierComplex {
    pub const fn new() -> Self {
        Self { re: Neumaier::new(), im: Neumaier::new() }
    }

    #[inline]
    pub fn add(&mut self, z: ComplexValue) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> ComplexValue {
        ComplexValue::new(self.re.value(), self.im.value())
    }
}

impl core::iter::FromIterator<ComplexValue> for NeumaierComplex {
    fn from_iter<I: IntoIterator<Item = ComplexValue>>(iter: I) -> Self {
        let mut acc = Self::new();
        iter.into_iter().for_each(|z| acc.add(z));
        acc
    }
}

impl core::iter::FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        iter.into_iter().for_each(|x| acc.add(x));
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumResult {
    pub value: ComplexValue,
    pub terms_used: usize,
}

/// Sums `term(0), term(1), ...` in index order.
///
/// Stops once [`QUIET_TERMS`] consecutive terms satisfy
/// `|term| <= tol.allowance(|running sum|)`; every consumed term is included.
pub fn compensated_sum<F>(mut term: F, tol: &Tolerance) -> Result<SumResult>
where
    F: FnMut(usize) -> ComplexValue,
{
    let mut acc = NeumaierComplex::new();
    let mut quiet = 0;
    for k in 0..tol.max_terms {
        let t = term(k);
        if !super::is_finite(t) {
            return Err(Error::Domain(format!("series term {k} is not finite")));
        }
        acc.add(t);
        if t.norm() <= tol.allowance(acc.value().norm()) {
            quiet += 1;
            if quiet == QUIET_TERMS {
                return Ok(SumResult { value: acc.value(), terms_used: k + 1 });
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NoConvergence { terms: tol.max_terms, partial: acc.value() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tight() -> Tolerance {
        Tolerance { abs_tol: 1e-18, rel_tol: 1e-17, ..Tolerance::default() }
    }

    #[test]
    fn geometric_series() {
        let r = compensated_sum(|k| ComplexValue::new(libm::ldexp(1.0, -(k as i32)), 0.0), &tight()).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-15);
    }

    #[test]
    fn zero_series_stops_after_three_terms() {
        let r = compensated_sum(|_| ComplexValue::new(0.0, 0.0), &tight()).unwrap();
        assert_eq!(r.value, ComplexValue::new(0.0, 0.0));
        assert_eq!(r.terms_used, 3);
    }

    #[test]
    fn telescoping_series() {
        // partial sum through N terms is 1 - 1/(N+1); the sum itself must be exact to 1e-12
        let tol = Tolerance { abs_tol: 1e-13, rel_tol: 0.0, max_terms: 100_000_000, ..Tolerance::default() };
        let r = compensated_sum(
            |k| {
                let n = (k + 1) as f64;
                ComplexValue::new(1.0 / (n * (n + 1.0)), 0.0)
            },
            &tol,
        )
        .unwrap();
        let tail = 1.0 / (r.terms_used as f64 + 1.0);
        assert!((r.value.re + tail - 1.0).abs() < 1e-12);
    }

    #[test]
    fn budget_exhaustion_reports_partial() {
        let tol = Tolerance { max_terms: 10, ..tight() };
        match compensated_sum(|_| ComplexValue::new(1.0, 0.0), &tol) {
            Err(Error::NoConvergence { terms, partial }) => {
                assert_eq!(terms, 10);
                assert_eq!(partial.re, 10.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_terms_inside_series_do_not_stop_it_early() {
        // 1, 0, 0, 1/4, 0, 0, 1/16, ... : two zeros in a row never trip the rule
        let r = compensated_sum(
            |k| {
                if k % 3 == 0 {
                    ComplexValue::new(libm::ldexp(1.0, -2 * (k as i32 / 3)), 0.0)
                } else {
                    ComplexValue::new(0.0, 0.0)
                }
            },
            &tight(),
        )
        .unwrap();
        assert!((r.value.re - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn neumaier_recovers_cancelled_bits() {
        let acc: Neumaier = [1.0, 1e100, 1.0, -1e100].into_iter().collect();
        assert_eq!(acc.value(), 2.0);
    }
}
