//! Generic refinements of a weight: the chain `(ω, w)` standing for `ω + εw`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::binomial::MonomialIdeal;
use super::groebner::{groebner_basis, lattice_ideal_generators, GroebnerBasis};
use super::order::TermOrder;
use crate::error::{Error, Result};
use crate::exact::GaleDiagram;

/// Range of the entries of a drawn refining weight.
pub const DRAW_RANGE: i64 = 16;
pub const MAX_DRAWS: usize = 10_000;

#[derive(Clone, Debug)]
pub struct Refinement {
    pub primary: Vec<i64>,
    pub w: Vec<i64>,
    pub basis: GroebnerBasis,
    /// `in_w(in_primary(I_A))`, monomial by construction.
    pub ideal: MonomialIdeal,
    /// Number of weights drawn before a generic one was found.
    pub draws: usize,
}

/// Draw `w` from a ChaCha stream seeded by `seed` until `in_w(in_ω(I_A))`
/// is a monomial ideal, i.e. the chain `(ω, w)` breaks every tie in the
/// reduced Gröbner basis it defines.
pub fn generic_refinement(b: &GaleDiagram, primary: &[i64], seed: u64) -> Result<Refinement> {
    let n = b.n();
    let gens = lattice_ideal_generators(b);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for draws in 1..=MAX_DRAWS {
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-DRAW_RANGE..=DRAW_RANGE)).collect();
        let order = TermOrder::new(vec![primary.to_vec(), w.clone()]);
        let basis = groebner_basis(&gens, &order);
        let strict = basis
            .elements()
            .iter()
            .all(|g| order.cmp_chain(&g.plus, &g.minus).is_gt());
        if strict {
            let ideal = basis.leading_ideal();
            return Ok(Refinement {
                primary: primary.to_vec(),
                w,
                basis,
                ideal,
                draws,
            });
        }
    }
    Err(Error::Precondition(format!(
        "no generic refinement found in {MAX_DRAWS} draws"
    )))
}
