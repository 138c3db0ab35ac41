//! Negative supports and the minimum-negative-support property.
//!
//! For `x + Bz`, a coordinate `j` can be a negative integer only when `x_j`
//! is an integer; symbolic and non-integral coordinates never contribute.
//! So `nsupp(x + Bz) ⊊ nsupp(x)` holds for some `z` iff for some
//! `i ∈ nsupp(x)` the system
//! `x_i + (Bz)_i ≥ 0` and `x_j + (Bz)_j ≥ 0` for every integral `j ∉ nsupp(x)`
//! has an integer solution, which is a planar integer program.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use crate::exact::{AffineForm, GaleDiagram, ParamVector};
use crate::pairs::polyhedron::{integer_points_2d, HalfPlane, Polyhedron2D};

/// `{i : x_i ∈ Z_{<0}}`, 0-based.
pub fn negative_support(x: &ParamVector) -> BTreeSet<usize> {
    x.iter()
        .enumerate()
        .filter(|(_, f)| f.is_negative_integer())
        .map(|(i, _)| i)
        .collect()
}

/// 1-based rendering such as `{1,3}`.
pub fn fmt_support(s: &BTreeSet<usize>) -> String {
    let v: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn int_coord(f: &AffineForm) -> Option<i64> {
    f.as_integer().and_then(|v| v.to_i64())
}

/// `x_j + (Bz)_j ≥ 0`.
fn nonneg(b: &GaleDiagram, j: usize, xj: i64) -> HalfPlane {
    let r = b.rows()[j];
    HalfPlane::le([-r[0], -r[1]], xj)
}

/// A `z` with `nsupp(x + Bz) ⊊ nsupp(x)`, if one exists.
pub fn shrinking_shift(x: &ParamVector, b: &GaleDiagram) -> Option<[i64; 2]> {
    let s = negative_support(x);
    let mut base = Polyhedron2D::default();
    for (j, f) in x.iter().enumerate() {
        if s.contains(&j) {
            continue;
        }
        if let Some(xj) = int_coord(f) {
            base.push(nonneg(b, j, xj));
        }
    }
    s.iter().find_map(|&i| {
        let xi = int_coord(&x[i]).expect("negative support is integral");
        integer_points_2d(&base.with(nonneg(b, i, xi))).point()
    })
}

pub fn has_minimum_negative_support(x: &ParamVector, b: &GaleDiagram) -> bool {
    shrinking_shift(x, b).is_none()
}

/// A nonzero `z` with `nsupp(x + Bz) = ∅`, for `x` with empty negative
/// support. Its absence means `x` is the only vector of `x + BZ²` with
/// minimum negative support.
pub fn second_positive_point(x: &ParamVector, b: &GaleDiagram) -> Option<[i64; 2]> {
    let mut base = Polyhedron2D::default();
    for (j, f) in x.iter().enumerate() {
        if let Some(xj) = int_coord(f) {
            base.push(nonneg(b, j, xj));
        }
    }
    // z ≠ 0 as z1 ≥ 1, z1 ≤ -1, (z1 = 0, z2 ≥ 1), (z1 = 0, z2 ≤ -1)
    let pieces = [
        vec![HalfPlane::ge([1, 0], 1)],
        vec![HalfPlane::le([1, 0], -1)],
        vec![
            HalfPlane::le([1, 0], 0),
            HalfPlane::ge([1, 0], 0),
            HalfPlane::ge([0, 1], 1),
        ],
        vec![
            HalfPlane::le([1, 0], 0),
            HalfPlane::ge([1, 0], 0),
            HalfPlane::le([0, 1], -1),
        ],
    ];
    pieces.iter().find_map(|extra| {
        let mut p = base.clone();
        for h in extra {
            p.push(h.clone());
        }
        integer_points_2d(&p).point()
    })
}

/// Whether `x` is the unique minimum-negative-support vector of `x + BZ²`.
///
/// Requires `nsupp(x) = ∅`: then any other such vector `y` must also have
/// empty negative support, since `x` would otherwise shrink it.
pub fn unique_mns_in_fiber(x: &ParamVector, b: &GaleDiagram) -> Option<bool> {
    if !negative_support(x).is_empty() {
        return None;
    }
    Some(second_positive_point(x, b).is_none())
}

/// `x + Bz` for integer `z`.
pub fn shift(x: &ParamVector, b: &GaleDiagram, z: [i64; 2]) -> ParamVector {
    x.add_int_vec(&b.apply(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b5() -> GaleDiagram {
        GaleDiagram::from_rows(vec![[1, 2], [-1, 1], [-1, -1], [1, -1], [0, -1]])
    }

    fn pv(ints: &[i64], symbolic_last: bool) -> ParamVector {
        let mut v = ParamVector::from_ints(ints);
        if symbolic_last {
            let k = v.len() - 1;
            v.0[k] = AffineForm::symbol(k + 1).add_int(ints[k]);
        }
        v
    }

    #[test]
    fn negative_support_examples() {
        assert_eq!(negative_support(&ParamVector::from_ints(&[1, 1, -1, 0])), [2].into());
        assert!(negative_support(&ParamVector::from_ints(&[0, 0, 0])).is_empty());
        let x = ParamVector(vec![AffineForm::int(-1), AffineForm::symbol(5), AffineForm::int(-2)]);
        assert_eq!(negative_support(&x), [0, 2].into());
    }

    #[test]
    fn construction_vectors_have_mns() {
        let b = b5();
        let v = pv(&[2, 0, 0, 0, 0], true);
        let ve3 = v.minus_unit(2);
        assert!(has_minimum_negative_support(&ve3, &b));
        for z in [[-1, 0], [0, -1], [-1, -1]] {
            assert!(has_minimum_negative_support(&shift(&ve3, &b, z), &b));
        }
        assert_eq!(unique_mns_in_fiber(&v, &b), Some(true));
    }

    #[test]
    fn shrinkable_vector() {
        let b = b5();
        // (0,0,-1,0,a5) shifted by z=(0,-1) gives (-2,-1,0,1,1+a5): not smaller;
        // but (1,-1,-1,1,a5) + B(-1,0) = (0,0,0,0,a5)
        let x = pv(&[1, -1, -1, 1, 0], true);
        assert!(!has_minimum_negative_support(&x, &b));
        let z = shrinking_shift(&x, &b).unwrap();
        assert!(negative_support(&shift(&x, &b, z)).len() < 2);
    }
}
