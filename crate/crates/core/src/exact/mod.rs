//! Exact arithmetic layer: configurations, Gale diagrams, affine forms in
//! formal transcendentals, and rational linear solving.

pub mod affine;
pub mod config;
pub mod gale;
pub mod intmat;
pub mod solve;

pub use affine::{AffineForm, ParamVector};
pub use config::Configuration;
pub use gale::{gale_normalize, integer_kernel_basis, GaleDiagram, Normalized, Unimodular};
pub use solve::param_solve;
