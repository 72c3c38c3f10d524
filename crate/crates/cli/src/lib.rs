//! Verification front end for `loglambert-core`: identity suites over
//! parameter grids, asymptotic sweeps and smoothed-moment runs, written as
//! JSON or CSV reports.

// `!(x > 0.0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod app;
pub mod commands;
pub mod config;
pub mod error;
pub mod grid;
pub mod rows;
pub mod runner;
pub mod sink;
pub mod tasks;

pub use error::CliError;
