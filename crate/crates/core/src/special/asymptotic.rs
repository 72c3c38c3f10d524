//! Divergent asymptotic expansions `leading(z) + Σ_{k≥1} term(k, z)` and
//! their truncation.
//!
//! Term magnitudes first decrease and then grow without bound. Truncating
//! just before the smallest term is the classical optimum; since binary64 can
//! only resolve terms down to a fraction of the sum, [`AsymptoticSeries::resolved_index`]
//! also stops once the next term would fall below a resolution floor.

use alloc::vec::Vec;

use crate::error::{domain, Error, Result};
use crate::numerics::{ComplexValue, NeumaierComplex};

/// Evaluates the `k`-th term (`k >= 1`) at `z`.
pub type TermFn = fn(usize, ComplexValue) -> ComplexValue;

#[derive(Clone, Copy)]
pub struct AsymptoticSeries {
    pub leading: fn(ComplexValue) -> ComplexValue,
    pub term: TermFn,
    /// The expansion holds for `|arg z| < sector`.
    pub sector: f64,
    /// Largest `k` the coefficient generator can produce.
    pub max_index: usize,
}

/// A partial sum through `terms` and the size of what it leaves out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation {
    pub value: ComplexValue,
    pub terms: usize,
    /// `|term(terms + 1, z)|`, the customary error proxy.
    pub first_omitted: f64,
    /// Set when the sum already includes the smallest term or beyond.
    pub past_optimal: bool,
}

impl AsymptoticSeries {
    fn check_sector(&self, z: ComplexValue) -> Result<()> {
        if !(z.re.is_finite() && z.im.is_finite()) || z.arg().abs() >= self.sector {
            return Err(domain(alloc::format!("{z} lies outside the sector |arg z| < {}", self.sector)));
        }
        Ok(())
    }

    /// `|term(k, z)|` for `k = 1..=max_index`.
    pub fn magnitudes(&self, z: ComplexValue) -> Vec<f64> {
        (1..=self.max_index).map(|k| (self.term)(k, z).norm()).collect()
    }

    /// Number of terms kept by classical optimal truncation: the sum stops
    /// just before the smallest term.
    pub fn optimal_index(&self, z: ComplexValue) -> usize {
        let mags = self.magnitudes(z);
        let mut best = 0;
        for (i, m) in mags.iter().enumerate() {
            if *m < mags[best] {
                best = i;
            }
        }
        best
    }

    /// Number of terms kept when terms below `floor_rel · |sum|` count as
    /// unresolvable: the last term above the floor becomes the first omitted
    /// one. Falls back to [`optimal_index`](Self::optimal_index) when the
    /// terms start growing first.
    pub fn resolved_index(&self, z: ComplexValue, floor_rel: f64) -> usize {
        let mut sum = (self.leading)(z);
        let mut prev = f64::INFINITY;
        for k in 1..=self.max_index {
            let t = (self.term)(k, z);
            let m = t.norm();
            if m >= prev {
                return k - 2;
            }
            if m <= floor_rel * sum.norm() {
                return k.saturating_sub(2);
            }
            sum += t;
            prev = m;
        }
        self.max_index - 1
    }

    /// Partial sum through `k = terms`.
    pub fn sum_through(&self, z: ComplexValue, terms: usize) -> Result<Truncation> {
        self.check_sector(z)?;
        if terms >= self.max_index {
            return Err(Error::Budget(alloc::format!(
                "at most {} terms can be summed with a known first omitted term",
                self.max_index - 1
            )));
        }
        let mut acc = NeumaierComplex::new();
        acc.add((self.leading)(z));
        for k in 1..=terms {
            acc.add((self.term)(k, z));
        }
        let first_omitted = (self.term)(terms + 1, z).norm();
        Ok(Truncation { value: acc.value(), terms, first_omitted, past_optimal: terms > self.optimal_index(z) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Σ (-1)^k k!/z^{k+1}, the Stieltjes series of e^z E1(z)
    fn leading(z: ComplexValue) -> ComplexValue {
        z.inv()
    }
    fn term(k: usize, z: ComplexValue) -> ComplexValue {
        let mut f = 1.0;
        for j in 1..=k {
            f *= j as f64;
        }
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        z.powi(-(k as i32) - 1) * (sign * f)
    }

    fn series() -> AsymptoticSeries {
        AsymptoticSeries { leading, term, sector: core::f64::consts::PI, max_index: 60 }
    }

    #[test]
    fn optimal_index_sits_before_the_smallest_term() {
        let z = ComplexValue::new(10.0, 0.0);
        let s = series();
        let k = s.optimal_index(z);
        // |term k| = k!/10^{k+1} is smallest at k = 9 and k = 10
        assert!(k == 9 || k == 8, "{k}");
        let mags = s.magnitudes(z);
        assert!(mags[k] <= mags[k - 1] && mags[k] <= mags[k + 1]);
    }

    #[test]
    fn truncation_error_proxy_and_flags() {
        let z = ComplexValue::new(10.0, 0.0);
        let s = series();
        let t = s.sum_through(z, 3).unwrap();
        assert_eq!(t.terms, 3);
        assert!((t.first_omitted - 24.0 / 1e5).abs() < 1e-18);
        assert!(!t.past_optimal);
        assert!(s.sum_through(z, 20).unwrap().past_optimal);
        assert!(s.sum_through(z, 60).is_err());
        assert!(s.sum_through(ComplexValue::new(-1.0, 0.0), 2).is_err());
    }

    #[test]
    fn resolution_floor_cuts_early_for_large_arguments() {
        let z = ComplexValue::new(50.0, 0.0);
        let s = series();
        let k = s.resolved_index(z, 1e-6);
        assert!(k < s.optimal_index(z));
        let sum = s.sum_through(z, k).unwrap();
        assert!(sum.first_omitted > 1e-6 * sum.value.norm() * 0.5);
    }
}
