//! Fake exponents: for a standard pair `(∂^η, σ)` of a monomial initial
//! ideal, the unique `u` with `A·u = β` and `u_i = η_i` off `σ`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::affine::rat;
use crate::exact::{param_solve, Configuration, GaleDiagram, ParamVector};
use crate::pairs::{standard_pairs, StandardPair};
use crate::toric::binomial::MonomialIdeal;

use super::nsupp::has_minimum_negative_support;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FakeExponent {
    pub u: ParamVector,
    pub pair: StandardPair,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FakeExponents {
    pub exponents: Vec<FakeExponent>,
    /// Pairs whose linear system has no solution at this `β`.
    pub unsolvable: usize,
}

/// `a` and `m` must share a column order.
pub fn fake_exponents(a: &Configuration, beta: &ParamVector, m: &MonomialIdeal) -> Result<FakeExponents> {
    let mut out = FakeExponents::default();
    for pair in standard_pairs(m) {
        let fixed: BTreeMap<usize, _> = (0..a.n())
            .filter(|i| !pair.in_sigma(*i))
            .map(|i| (i, rat(pair.eta[i])))
            .collect();
        match param_solve(a, &fixed, beta) {
            Ok(u) => out.exponents.push(FakeExponent { u, pair }),
            Err(Error::NoSolution) => out.unsolvable += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Fake exponents with minimum negative support; each indexes one
/// logarithm-free canonical series.
pub fn logfree_exponents(
    a: &Configuration,
    b: &GaleDiagram,
    beta: &ParamVector,
    m: &MonomialIdeal,
) -> Result<Vec<FakeExponent>> {
    Ok(fake_exponents(a, beta, m)?
        .exponents
        .into_iter()
        .filter(|f| has_minimum_negative_support(&f.u, b))
        .collect())
}

/// Log-free exponents `u` with `u₃ = 0`.
pub fn kernel_basis_exponents(
    a: &Configuration,
    b: &GaleDiagram,
    degree: &ParamVector,
    m: &MonomialIdeal,
) -> Result<Vec<FakeExponent>> {
    Ok(logfree_exponents(a, b, degree, m)?
        .into_iter()
        .filter(|f| f.u[2].is_zero())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::AffineForm;
    use crate::hyper::construct::construct_exceptional;
    use crate::toric::order::unit;
    use crate::toric::perturb::generic_refinement;

    fn a5() -> Configuration {
        Configuration::new(vec![vec![1, 1, 1, 1, 1], vec![0, 1, 0, 1, 0], vec![0, 0, 1, 1, -2]]).unwrap()
    }

    #[test]
    fn generic_beta_solves_every_top_pair() {
        let c = construct_exceptional(&a5(), None).unwrap();
        let r = generic_refinement(c.b(), &unit(5, 2, -1), 0).unwrap();
        let beta = ParamVector((1..=3).map(|k| AffineForm::symbol(10 + k)).collect());
        let f = fake_exponents(&c.normal.a, &beta, &r.ideal).unwrap();
        let pairs = standard_pairs(&r.ideal);
        let top = pairs.iter().filter(|p| p.sigma.len() == 3).count();
        assert_eq!(f.exponents.len(), top);
        assert_eq!(f.exponents.len() + f.unsolvable, pairs.len());
        for e in &f.exponents {
            assert!(has_minimum_negative_support(&e.u, c.b()));
        }
    }

    #[test]
    fn degree_of_v_recovers_v() {
        let c = construct_exceptional(&a5(), None).unwrap();
        let r = generic_refinement(c.b(), &unit(5, 2, -1), 0).unwrap();
        let ks = kernel_basis_exponents(&c.normal.a, c.b(), &c.degree_of_v(), &r.ideal).unwrap();
        assert!(ks.iter().any(|f| f.u == c.v));
    }
}
