//! Exact Bernoulli numbers `B_n` (convention `B_1 = -1/2`) up to a fixed cap.
//!
//! The table is built once from `sum_{k=0}^{n} C(n+1, k) B_k = 0` in exact
//! rational arithmetic and then shared read-only.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use once_cell::race::OnceBox;

use super::extended::ExtendedValue;
use crate::error::{Error, Result};

/// Largest index held in the table.
pub const BERNOULLI_CAP: usize = 64;

/// One table entry: the exact value and its two rounded views.
#[derive(Debug, Clone)]
pub struct Bernoulli {
    pub exact: BigRational,
    pub value: f64,
    pub extended: ExtendedValue,
}

static TABLE: OnceBox<Vec<Bernoulli>> = OnceBox::new();

fn build() -> Vec<Bernoulli> {
    let mut exact: Vec<BigRational> = Vec::with_capacity(BERNOULLI_CAP + 1);
    exact.push(BigRational::from_integer(BigInt::from(1)));
    for n in 1..=BERNOULLI_CAP {
        // B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k
        let mut binom = BigInt::from(1);
        let mut acc = BigRational::zero();
        for (k, bk) in exact.iter().enumerate() {
            if !bk.is_zero() {
                acc += bk * BigRational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        exact.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    exact
        .into_iter()
        .map(|q| {
            let hi = q.to_f64().unwrap_or(0.0);
            let rest = &q - BigRational::from_float(hi).unwrap_or_else(BigRational::zero);
            let lo = rest.to_f64().unwrap_or(0.0);
            let extended = ExtendedValue::from_parts(hi, lo);
            Bernoulli { value: extended.to_f64(), exact: q, extended }
        })
        .collect()
}

fn table() -> &'static [Bernoulli] {
    TABLE.get_or_init(|| Box::new(build()))
}

/// `B_n` with its binary64 and double-word views.
pub fn bernoulli(n: usize) -> Result<&'static Bernoulli> {
    table().get(n).ok_or_else(|| Error::Budget(format!("Bernoulli index {n} exceeds cap {BERNOULLI_CAP}")))
}

/// Binary64 view of `B_n`; zero beyond the cap.
///
/// Internal series never index past the cap; the zero fallback only keeps
/// the hot loops free of error plumbing.
pub(crate) fn bernoulli_f64(n: usize) -> f64 {
    table().get(n).map_or(0.0, |b| b.value)
}

/// Double-word view of `B_n`; zero beyond the cap.
pub(crate) fn bernoulli_extended(n: usize) -> ExtendedValue {
    table().get(n).map_or(ExtendedValue::ZERO, |b| b.extended)
}
