//! Exact computations for codimension-2 toric ideals and the exceptional
//! parameters of their A-hypergeometric systems.

pub mod cli;
pub mod error;
pub mod exact;
pub mod hyper;
pub mod pairs;
pub mod report;
pub mod toric;

pub use error::{Error, Invariant, Result};
