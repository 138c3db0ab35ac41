//! An arrangement containing the exceptional set: for each monomial initial
//! ideal `M`, the union over pairs `(η, σ)` of `M` with `|σ| < d` of
//! `A·(η + Q^σ)`; then the intersection over all `M`.

use crate::error::Result;
use crate::exact::{integer_kernel_basis, Configuration};
use crate::pairs::{embedded_pairs, standard_pairs};
use crate::toric::binomial::MonomialIdeal;
use crate::toric::fan::{groebner_fan_monomial_initial_ideals, FanCone};

use super::subspace::{AffineSubspace, SubspaceArrangement};

/// `a` in the column order of `m`.
pub fn ideal_arrangement(a: &Configuration, m: &MonomialIdeal) -> SubspaceArrangement {
    let pairs = standard_pairs(m);
    SubspaceArrangement::new(embedded_pairs(&pairs, a.d()).into_iter().map(|p| {
        let dirs: Vec<Vec<i64>> = p.sigma.iter().map(|&i| a.column(i)).collect();
        AffineSubspace::from_ints(&a.apply(&p.eta), &dirs)
    }))
}

pub fn arrangement_over(a: &Configuration, cones: &[FanCone]) -> SubspaceArrangement {
    let mut it = cones.iter().map(|c| ideal_arrangement(a, &c.ideal));
    let Some(first) = it.next() else {
        return SubspaceArrangement::default();
    };
    it.fold(first, |acc, next| acc.intersect(&next))
}

pub fn exceptional_arrangement(a: &Configuration) -> Result<SubspaceArrangement> {
    let b = integer_kernel_basis(a)?;
    Ok(arrangement_over(a, &groebner_fan_monomial_initial_ideals(&b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_example_arrangement_is_the_exceptional_line() {
        let a = Configuration::new(vec![vec![1, 1, 1, 1, 1], vec![0, 1, 0, 1, 0], vec![0, 0, 1, 1, -2]]).unwrap();
        let arr = exceptional_arrangement(&a).unwrap();
        let line = AffineSubspace::from_ints(&[1, 0, -1], &[vec![1, 0, -2]]);
        assert_eq!(arr, SubspaceArrangement::new([line]), "{arr}");
        // these isolated points are not components of the intersection
        for p in [[0, 0, 0], [4, 3, 1], [1, 1, 1]] {
            assert!(!arr.contains_point(AffineSubspace::point_of(&p).point()));
        }
    }

    #[test]
    fn twisted_cubic_has_empty_arrangement() {
        let a = Configuration::new(vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        assert!(exceptional_arrangement(&a).unwrap().is_empty());
    }
}
