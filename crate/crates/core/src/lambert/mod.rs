//! Lambert series with logarithmic and divisor weights, their exact
//! transformations and the small-`y` expansion.

mod brackets;
mod direct;
mod divisor;
mod expansion;
mod identities;
mod sigma;

pub use brackets::{
    digamma_bracket_sum, digamma_bracket_term, psi1_bracket_sum, psi1_bracket_term, tail_start, BracketSum,
};
pub use direct::{divisor_log_form, lambert_gamma_log, lambert_log_lhs, lambert_log_lhs_extended, lambert_plain};
pub use divisor::{divisor_count, divisor_power_sum, DivisorSieve};
pub use expansion::{
    asymptotic_logy0, asymptotic_logy0_extended, lambert_asymptotic_check, LogExpansion, LogExpansionExtended,
    MAX_EXPANSION_ORDER,
};
pub use identities::{
    divisor_form_check, lambert_log_alt_check, lambert_log_check, lambert_log_rhs, ramanujan_bernoulli_block,
    ramanujan_check, wigert_check,
};
pub use sigma::{
    sigma_bracket, sigma_bracket_digits, sigma_lambert, sigma_lambert_check, SigmaTail, CANCELLATION_LIMIT,
};

use crate::error::{domain, Result};
use crate::numerics::{ComplexValue, Tolerance};

/// A point `y` with `Re y > 0` and the tolerance to evaluate at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambertParams {
    pub y: ComplexValue,
    pub tol: Tolerance,
}

impl LambertParams {
    pub fn new(y: ComplexValue, tol: Tolerance) -> Result<Self> {
        if !(y.re.is_finite() && y.im.is_finite()) {
            return Err(domain("y must be finite"));
        }
        if !(y.re > 0.0) {
            return Err(domain(alloc::format!("Re(y) must be positive, got {y}")));
        }
        Ok(LambertParams { y, tol })
    }
}
