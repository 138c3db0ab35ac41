use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;

use super::affine::{rat, AffineForm, ParamVector};
use super::config::Configuration;
use super::intmat::rref;
use crate::error::{Error, Result};

/// Solve `A u = β` with `u_i` prescribed on the keys of `fixed` (0-based).
///
/// The system is linear over Q in each component (constant and every
/// α-coefficient) separately, so one echelon reduction with several
/// right-hand sides solves it.
pub fn param_solve(a: &Configuration, fixed: &BTreeMap<usize, BigRational>, beta: &ParamVector) -> Result<ParamVector> {
    let n = a.n();
    if beta.len() != a.d() {
        return Err(Error::Precondition(format!(
            "β has length {}, expected {}",
            beta.len(),
            a.d()
        )));
    }
    if let Some(&i) = fixed.keys().find(|&&i| i >= n) {
        return Err(Error::Precondition(format!("fixed index {i} out of range")));
    }
    let free: Vec<usize> = (0..n).filter(|i| !fixed.contains_key(i)).collect();
    let labels: BTreeSet<usize> = beta.iter().flat_map(|f| f.coeffs().keys().copied()).collect();
    let labels: Vec<usize> = labels.into_iter().collect();

    let aug: Vec<Vec<BigRational>> = a
        .rows()
        .iter()
        .zip(beta.iter())
        .map(|(row, b)| {
            let mut r: Vec<BigRational> = free.iter().map(|&j| rat(row[j])).collect();
            let shift: BigRational = fixed
                .iter()
                .map(|(&j, x)| rat(row[j]) * x)
                .fold(BigRational::zero(), |s, t| s + t);
            r.push(b.constant_part() - shift);
            r.extend(labels.iter().map(|l| b.coeff(*l)));
            r
        })
        .collect();
    let k = free.len();
    let (red, piv) = rref(aug);
    if piv.iter().any(|&p| p >= k) {
        return Err(Error::NoSolution);
    }
    if piv.len() < k {
        return Err(Error::NonUnique);
    }
    let mut u: Vec<AffineForm> = (0..n)
        .map(|i| fixed.get(&i).cloned().map(AffineForm::constant).unwrap_or_default())
        .collect();
    for (row, &p) in red.iter().zip(&piv) {
        let coeffs = labels
            .iter()
            .enumerate()
            .map(|(t, l)| (*l, row[k + 1 + t].clone()))
            .collect();
        u[free[p]] = AffineForm::from_parts(row[k].clone(), coeffs);
    }
    Ok(ParamVector(u))
}
