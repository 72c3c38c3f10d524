//! Named special functions, each with a stable evaluation strategy.

pub mod constants;
pub mod gamma;

pub use constants::{
    euler_gamma, extended_constants, glaisher_log_a, stieltjes, stieltjes_constants, ExtendedConstants,
    StieltjesConstants,
};
pub use gamma::{digamma, log_gamma, rgamma, rgamma_extended, trigamma};
pub mod zeta;
pub use zeta::{
    zeta, zeta_pair, zeta_prime, zeta_prime_even, zeta_prime_even_extended, zeta_tail, ZETA_PRIME_EVEN_CAP,
};
pub mod asymptotic;
pub mod psi1;
pub use asymptotic::{AsymptoticSeries, Truncation};
pub use psi1::{psi1, psi1_asymptotic, psi1_optimal_terms, psi1_reference, psi1_with_radius};
pub mod expint;
pub use expint::{exp_integral_e1, exp_integral_ei, scaled_e1, shi, shi_chi, sinhshi_minus_coshchi};
pub mod mittag;
pub use mittag::{hyp1f2, mittag_leffler_e2b, ml_d2b_at1, D2bMode};
