//! Standard pairs of monomial ideals and exact integer programming in the
//! plane.

pub mod lattice;
pub mod polyhedron;
pub mod standard;

pub use polyhedron::{integer_points_2d, HalfPlane, IntegerPoints, Polyhedron2D};
pub use standard::{embedded_pairs, standard_pairs, top_pair_count, StandardPair};
