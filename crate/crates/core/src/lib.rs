//! Long-range dependence detection and ARFIMA forecasting for service
//! response-time series.
//!
//! The pipeline mirrors how the library is meant to be used: ingest a regular
//! series ([`series`]), check it for long memory ([`lrd`]), fit and forecast
//! ([`models`]), and score forecasters against each other by rolling-origin
//! cross-validation ([`evaluation`]). [`synthgen`] produces seeded series with
//! known memory for testing, and [`cli`] exposes all of it as a command line.

// `!(x > 0.0)` is used on purpose so NaN lands in the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod evaluation;
pub mod lrd;
pub mod models;
pub mod numfmt;
pub mod series;
pub mod synthgen;

pub use error::{Error, Result};
pub use series::{TimeSeries, TransformSpec};
