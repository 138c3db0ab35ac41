//! Toric ideals as binomial ideals: term orders, Gröbner bases, initial
//! ideals and the Gröbner fan.

pub mod binomial;
pub mod cache;
pub mod fan;
pub mod groebner;
pub mod order;
pub mod perturb;

pub use binomial::{Binomial, Exponent, MonomialIdeal};
pub use fan::{groebner_fan_monomial_initial_ideals, FanCone};
pub use groebner::{groebner_basis, initial_ideal, toric_groebner_basis, GroebnerBasis};
pub use order::TermOrder;
