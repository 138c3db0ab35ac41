//! The Cohen–Macaulay test, the exceptional parameter `β` of a
//! non-Cohen–Macaulay configuration, and the family of parameters it spans.

use crate::error::{Error, Result};
use crate::exact::affine::mat_apply;
use crate::exact::gale::{default_search_bound, four_quadrant_transform, gale_normalize, Normalized, Unimodular};
use crate::exact::{integer_kernel_basis, AffineForm, Configuration, GaleDiagram, ParamVector};

use super::subspace::AffineSubspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub is_cm: bool,
    /// A unimodular `U` with rows of `B·U` in all four open quadrants.
    pub witness: Option<Unimodular>,
    /// Rows of `B·U` in Q1, Q2, Q3, Q4.
    pub quadrant_rows: Option<[usize; 4]>,
    /// Whether the witness came from the bounded search (vs. the exact test).
    pub found_by_search: bool,
    pub diagram: GaleDiagram,
}

/// `I_A` fails to be Cohen–Macaulay iff some Gale diagram of `A` meets all
/// four open quadrants. Decided exactly; `bound` only limits the search for
/// a small witness.
pub fn is_cohen_macaulay_codim2(a: &Configuration, bound: Option<i64>) -> Result<CmVerdict> {
    let b = integer_kernel_basis(a)?;
    let bound = bound.unwrap_or_else(|| default_search_bound(&b));
    Ok(match four_quadrant_transform(&b, bound) {
        Some((u, rows, by_search)) => CmVerdict {
            is_cm: false,
            witness: Some(u),
            quadrant_rows: Some(rows),
            found_by_search: by_search,
            diagram: b,
        },
        None => CmVerdict {
            is_cm: true,
            witness: None,
            quadrant_rows: None,
            found_by_search: false,
            diagram: b,
        },
    })
}

/// A configuration together with its normalized Gale diagram; `a` has its
/// columns in the diagram's row order.
#[derive(Clone, Debug)]
pub struct Normal {
    pub original: Configuration,
    pub normalized: Normalized,
    pub a: Configuration,
}

impl Normal {
    pub fn new(original: &Configuration, bound: Option<i64>) -> Result<Self> {
        let b = integer_kernel_basis(original)?;
        let normalized = gale_normalize(&b, bound)?;
        let a = original.permuted(normalized.diagram.permutation());
        Ok(Normal {
            original: original.clone(),
            normalized,
            a,
        })
    }

    pub fn b(&self) -> &GaleDiagram {
        &self.normalized.diagram
    }

    pub fn permutation(&self) -> &[usize] {
        self.normalized.diagram.permutation()
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn d(&self) -> usize {
        self.a.d()
    }

    /// Column `k` of the normalized matrix, i.e. `A'·e_k`.
    pub fn column(&self, k: usize) -> Vec<i64> {
        self.a.column(k)
    }

    /// Reorder a vector indexed by normalized columns into original order.
    pub fn to_original<T: Clone>(&self, x: &[T]) -> Vec<T> {
        let perm = self.permutation();
        let mut out: Vec<Option<T>> = vec![None; x.len()];
        for (k, &j) in perm.iter().enumerate() {
            out[j] = Some(x[k].clone());
        }
        out.into_iter().map(|v| v.expect("permutation")).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub normal: Normal,
    /// `B₁₊ + B₂₊ - e₁ - e₂ - e₄ + Σ_{i≥5} α_i e_i`, normalized column order.
    pub v: ParamVector,
    /// `A·(v - e₃)`.
    pub beta: ParamVector,
}

impl Construction {
    pub fn b(&self) -> &GaleDiagram {
        self.normal.b()
    }

    /// `v - e₃`, `v - e₃ - B₁`, `v - e₃ - B₂`, `v - e₃ - B₁ - B₂` with the
    /// coordinate (0-based) each is expected to make negative.
    pub fn shifted(&self) -> [(ParamVector, usize); 4] {
        let b = self.b();
        let base = self.v.minus_unit(2);
        let s = |z: [i64; 2]| base.sub_int_vec(&b.apply(z));
        [(base.clone(), 2), (s([1, 0]), 3), (s([0, 1]), 1), (s([1, 1]), 0)]
    }

    /// `A·v`.
    pub fn degree_of_v(&self) -> ParamVector {
        mat_apply(self.normal.a.rows(), &self.v)
    }
}

pub fn construct_exceptional(a: &Configuration, bound: Option<i64>) -> Result<Construction> {
    let normal = Normal::new(a, bound)?;
    let b = normal.b();
    let n = b.n();
    let mut v: Vec<AffineForm> = (0..n)
        .map(|i| {
            let r = b.rows()[i];
            AffineForm::int(r[0].max(0) + r[1].max(0))
        })
        .collect();
    for i in [0, 1, 3] {
        v[i] = v[i].add_int(-1);
    }
    for (i, vi) in v.iter_mut().enumerate().skip(4) {
        *vi += &AffineForm::symbol(i + 1);
    }
    let v = ParamVector(v);
    let beta = mat_apply(normal.a.rows(), &v.minus_unit(2));
    Ok(Construction { normal, v, beta })
}

/// `{A·(v₁e₁ + v₂e₂ - e₃ + v₄e₄ + Σ s_i e_i)}`: a point when `n = 4`.
pub fn exceptional_family(c: &Construction) -> Result<AffineSubspace> {
    let n = c.normal.n();
    let mut base = vec![0i64; n];
    for i in [0, 1, 3] {
        base[i] = c.v[i]
            .as_i64()
            .ok_or_else(|| Error::Precondition("v₁, v₂, v₄ must be integers".into()))?;
    }
    base[2] = -1;
    let point = c.normal.a.apply(&base);
    let dirs: Vec<Vec<i64>> = (4..n).map(|k| c.normal.column(k)).collect();
    Ok(AffineSubspace::from_ints(&point, &dirs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::affine::rat;

    #[test]
    fn plane_example() {
        let a = Configuration::new(vec![vec![1, 1, 1, 1, 1], vec![0, 1, 0, 1, 0], vec![0, 0, 1, 1, -2]]).unwrap();
        let v = is_cohen_macaulay_codim2(&a, None).unwrap();
        assert!(!v.is_cm);
        let c = construct_exceptional(&a, None).unwrap();
        let s = AffineForm::symbol(5);
        assert_eq!(
            c.v,
            ParamVector(vec![2.into(), 0.into(), 0.into(), 0.into(), s.clone()])
        );
        assert_eq!(
            c.beta,
            ParamVector(vec![s.add_int(1), 0.into(), s.scale(&rat(-2)).add_int(-1)])
        );
        let fam = exceptional_family(&c).unwrap();
        assert_eq!(fam, AffineSubspace::from_ints(&[1, 0, -1], &[vec![1, 0, -2]]));
    }

    #[test]
    fn quartic_curve() {
        let a = Configuration::new(vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]]).unwrap();
        let c = construct_exceptional(&a, None).unwrap();
        assert_eq!(c.v, ParamVector::from_ints(&[1, 1, 0, 0]));
        assert_eq!(c.beta, ParamVector::from_ints(&[1, 2]));
        assert_eq!(c.normal.to_original(&[10, 20, 30, 40]), vec![10, 30, 20, 40]);
    }

    #[test]
    fn twisted_cubic_is_cm() {
        let a = Configuration::new(vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        assert!(is_cohen_macaulay_codim2(&a, Some(10)).unwrap().is_cm);
        assert!(matches!(
            construct_exceptional(&a, None),
            Err(Error::NormalizationImpossible)
        ));
    }
}
