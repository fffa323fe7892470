//! Verification of q-series identities by exact truncated expansion and
//! high-precision numeric evaluation.

pub mod bailey;
pub mod cli;
pub mod error;
pub mod identities;
pub mod numeric;
pub mod qpolys;
pub mod series;
pub mod summation;

pub use error::{Error, Result};
