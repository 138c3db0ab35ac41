//! Normalized volume of `conv(A)`, computed two independent ways.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::affine::rat;
use crate::exact::intmat::{combinations, det_i64, solve_square};
use crate::exact::{integer_kernel_basis, Configuration};
use crate::pairs::{standard_pairs, top_pair_count};
use crate::toric::order::TermOrder;
use crate::toric::toric_groebner_basis;

const HEIGHT_RANGE: i64 = 1 << 20;
const MAX_ATTEMPTS: usize = 64;

/// Number of top-dimensional standard pairs of a monomial initial ideal.
pub fn volume_by_pairs(a: &Configuration) -> Result<u64> {
    let b = integer_kernel_basis(a)?;
    let gb = toric_groebner_basis(&b, &TermOrder::graded_lex());
    Ok(top_pair_count(&standard_pairs(&gb.leading_ideal()), a.d()) as u64)
}

/// A regular triangulation from generic lifting heights: `τ` is a cell iff
/// the hyperplane through the lifted columns of `τ` lies strictly below
/// every other lifted column.
pub fn regular_triangulation(a: &Configuration, seed: u64) -> Result<Vec<Vec<usize>>> {
    let (d, n) = (a.d(), a.n());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'draw: for _ in 0..MAX_ATTEMPTS {
        let h: Vec<i64> = (0..n).map(|_| rng.gen_range(0..HEIGHT_RANGE)).collect();
        let mut cells = Vec::new();
        for tau in combinations(n, d) {
            let cols: Vec<Vec<i64>> = tau.iter().map(|&j| a.column(j)).collect();
            if det_i64(&cols).is_zero() {
                continue;
            }
            let m: Vec<Vec<BigRational>> = cols.iter().map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
            let rhs: Vec<BigRational> = tau.iter().map(|&j| rat(h[j])).collect();
            let c = solve_square(&m, &rhs).expect("nonsingular");
            let mut lower = true;
            for k in (0..n).filter(|k| !tau.contains(k)) {
                let val: BigRational = c.iter().zip(a.column(k)).map(|(ci, x)| ci * rat(x)).sum();
                let gap = rat(h[k]) - val;
                if gap.is_zero() {
                    continue 'draw;
                }
                lower &= gap.is_positive();
            }
            if lower {
                cells.push(tau);
            }
        }
        return Ok(cells);
    }
    Err(Error::Precondition("no generic lifting found".into()))
}

pub fn volume_by_triangulation(a: &Configuration, seed: u64) -> Result<u64> {
    let total: BigInt = regular_triangulation(a, seed)?
        .iter()
        .map(|tau| {
            let cols: Vec<Vec<i64>> = tau.iter().map(|&j| a.column(j)).collect();
            det_i64(&cols).abs()
        })
        .sum();
    total
        .to_u64()
        .ok_or_else(|| Error::Precondition("volume overflow".into()))
}

/// Both methods; disagreement is an error.
pub fn volume(a: &Configuration, seed: u64) -> Result<u64> {
    let pairs = volume_by_pairs(a)?;
    let triangulation = volume_by_triangulation(a, seed)?;
    if pairs != triangulation {
        return Err(Error::MethodDisagreement { pairs, triangulation });
    }
    Ok(pairs)
}
