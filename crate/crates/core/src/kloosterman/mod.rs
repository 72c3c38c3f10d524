//! Integral identities around the kernel `K(w) = ∫₀^∞ t cos t/(t² + w²) dt
//! = sinh(w)Shi(w) − cosh(w)Chi(w)`: the digamma sum over `K(nw)`, its
//! log-weighted ψ₁ analogue, the vertical-line Mellin representation of ψ₁,
//! and the series/integral forms behind them.

mod analogue;
mod kernel;
mod kernel_sum;
mod line;

pub use analogue::{analogue_term, log_kernel_sum_check, log_kernel_sum_lhs, log_kernel_sum_rhs, AnalogueSum};
pub use kernel::{
    digamma_power_series, digamma_series_check, kernel_integral_check, kernel_quadrature, ml_derivative_check,
    psi1_asymptotic_check, SeriesPartial,
};
pub use kernel_sum::{kernel_sum_check, kernel_sum_lhs, kernel_sum_rhs, kernel_sum_term_quadrature};
pub use line::{kloosterman_line_check, kloosterman_line_integral, line_integrand, LineIntegral, LineIntegralSpec};

use crate::error::{domain, Result};
use crate::numerics::ComplexValue;

/// `Re W` from which kernels are replaced by their large-argument expansion.
pub const KERNEL_TAIL_REAL: f64 = 40.0;

fn check_right_half_plane(w: ComplexValue) -> Result<()> {
    if !(w.re > 0.0) || !w.re.is_finite() || !w.im.is_finite() {
        return Err(domain(alloc::format!("needs Re w > 0, got {w}")));
    }
    Ok(())
}

fn i_times(w: ComplexValue) -> ComplexValue {
    ComplexValue::new(-w.im, w.re)
}
