#![no_std]
// `!(x > 0.0)` is the idiom for rejecting NaN along with the bad range
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// node tables and constants keep the digits they were generated with
#![allow(clippy::excessive_precision)]
extern crate alloc;

pub mod error;
pub mod kloosterman;
pub mod lambert;
pub mod moments;
pub mod numerics;
pub mod report;
pub mod special;

pub use error::{Error, Result};
pub use numerics::{ComplexValue, ExtendedComplex, ExtendedValue, Tolerance};
