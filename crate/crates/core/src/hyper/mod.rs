//! Negative supports, fake exponents, canonical series and the exceptional
//! parameters of codimension-2 A-hypergeometric systems.

pub mod arrangement;
pub mod cdd;
pub mod construct;
pub mod fake;
pub mod nsupp;
pub mod series;
pub mod subspace;
pub mod volume;
pub mod witness;

pub use arrangement::{exceptional_arrangement, ideal_arrangement};
pub use cdd::{cdd_exceptional_d2, semigroup_member_d2, Curve};
pub use construct::{
    construct_exceptional, exceptional_family, is_cohen_macaulay_codim2, CmVerdict, Construction, Normal,
};
pub use fake::{fake_exponents, kernel_basis_exponents, logfree_exponents, FakeExponent, FakeExponents};
pub use nsupp::{has_minimum_negative_support, negative_support, shrinking_shift, unique_mns_in_fiber};
pub use series::{canonical_series, verify_series, FactoredProduct, SeriesCheck, SeriesTruncation};
pub use subspace::{AffineSubspace, SubspaceArrangement};
pub use volume::volume;
pub use witness::{verify_construction_witnesses, Check, WitnessReport};
