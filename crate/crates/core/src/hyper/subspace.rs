//! Rational affine subspaces and finite unions of them.
//!
//! Canonical form: directions in reduced row echelon form, and a base point
//! whose pivot coordinates are zero. Two subspaces are equal iff their
//! canonical forms are.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::affine::{fmt_rational, rat};
use crate::exact::intmat::rref;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineSubspace {
    /// `dirs.len()` first so that points sort before lines.
    dim: usize,
    point: Vec<BigRational>,
    dirs: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl AffineSubspace {
    pub fn new(point: Vec<BigRational>, dirs: Vec<Vec<BigRational>>) -> Self {
        let d = point.len();
        let dirs: Vec<Vec<BigRational>> = dirs.into_iter().filter(|r| r.len() == d).collect();
        let (dirs, pivots) = if dirs.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            rref(dirs)
        };
        let mut point = point;
        for (row, &p) in dirs.iter().zip(&pivots) {
            let f = point[p].clone();
            if !f.is_zero() {
                for (x, y) in point.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        AffineSubspace {
            dim: dirs.len(),
            point,
            dirs,
            pivots,
        }
    }

    pub fn from_ints(point: &[i64], dirs: &[Vec<i64>]) -> Self {
        Self::new(
            point.iter().map(|&x| rat(x)).collect(),
            dirs.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        )
    }

    pub fn point_of(p: &[i64]) -> Self {
        Self::from_ints(p, &[])
    }

    pub fn ambient(&self) -> usize {
        self.point.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self) -> &[BigRational] {
        &self.point
    }

    pub fn directions(&self) -> &[Vec<BigRational>] {
        &self.dirs
    }

    /// `x - point` reduced against the directions; zero iff `x` lies in `self`.
    fn residual(&self, x: &[BigRational], affine: bool) -> Vec<BigRational> {
        let mut r: Vec<BigRational> = if affine {
            x.iter().zip(&self.point).map(|(a, b)| a - b).collect()
        } else {
            x.to_vec()
        };
        for (row, &p) in self.dirs.iter().zip(&self.pivots) {
            let f = r[p].clone();
            if !f.is_zero() {
                for (a, b) in r.iter_mut().zip(row) {
                    *a -= &f * b;
                }
            }
        }
        r
    }

    pub fn contains_point(&self, x: &[BigRational]) -> bool {
        self.residual(x, true).iter().all(Zero::is_zero)
    }

    /// Whether the direction space contains `u`.
    pub fn contains_direction(&self, u: &[BigRational]) -> bool {
        self.residual(u, false).iter().all(Zero::is_zero)
    }

    pub fn contains(&self, other: &AffineSubspace) -> bool {
        other.dim <= self.dim
            && self.contains_point(&other.point)
            && other.dirs.iter().all(|u| self.contains_direction(u))
    }

    /// Equations `E x = c` cutting out `self`: a basis of the annihilator
    /// of the direction space.
    fn equations(&self) -> Vec<(Vec<BigRational>, BigRational)> {
        let d = self.ambient();
        let free: Vec<usize> = (0..d).filter(|c| !self.pivots.contains(c)).collect();
        // annihilator of the row space of an RREF matrix: for each free column f,
        // e_f - Σ_k dirs[k][f] e_{pivot_k}
        free.iter()
            .map(|&f| {
                let mut e = vec![BigRational::zero(); d];
                e[f] = BigRational::one();
                for (row, &p) in self.dirs.iter().zip(&self.pivots) {
                    e[p] = -row[f].clone();
                }
                let c = e.iter().zip(&self.point).map(|(a, b)| a * b).sum();
                (e, c)
            })
            .collect()
    }

    /// Solutions of `E x = c`, or `None` if inconsistent.
    fn from_equations(d: usize, eqs: Vec<(Vec<BigRational>, BigRational)>) -> Option<Self> {
        if eqs.is_empty() {
            let dirs = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            if i == j {
                                BigRational::one()
                            } else {
                                BigRational::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            return Some(Self::new(vec![BigRational::zero(); d], dirs));
        }
        let aug: Vec<Vec<BigRational>> = eqs
            .into_iter()
            .map(|(mut e, c)| {
                e.push(c);
                e
            })
            .collect();
        let (red, piv) = rref(aug);
        if piv.last() == Some(&d) {
            return None;
        }
        let mut point = vec![BigRational::zero(); d];
        for (row, &p) in red.iter().zip(&piv) {
            point[p] = row[d].clone();
        }
        let dirs = (0..d)
            .filter(|c| !piv.contains(c))
            .map(|f| {
                let mut u = vec![BigRational::zero(); d];
                u[f] = BigRational::one();
                for (row, &p) in red.iter().zip(&piv) {
                    u[p] = -row[f].clone();
                }
                u
            })
            .collect();
        Some(Self::new(point, dirs))
    }

    pub fn intersect(&self, other: &AffineSubspace) -> Option<AffineSubspace> {
        let mut eqs = self.equations();
        eqs.extend(other.equations());
        Self::from_equations(self.ambient(), eqs)
    }

    /// `point + Σ s_i dir_i` for the given parameters.
    pub fn at(&self, s: &[BigRational]) -> Vec<BigRational> {
        let mut x = self.point.clone();
        for (si, u) in s.iter().zip(&self.dirs) {
            for (a, b) in x.iter_mut().zip(u) {
                *a += si * b;
            }
        }
        x
    }

    /// Parameters `s` with `at(s) = x`, if `x` lies in `self`.
    pub fn parameters_of(&self, x: &[BigRational]) -> Option<Vec<BigRational>> {
        if !self.contains_point(x) {
            return None;
        }
        // pivot coordinate p_k of `x - point` is exactly s_k in RREF
        Some(self.pivots.iter().map(|&p| &x[p] - &self.point[p]).collect())
    }
}

fn fmt_vec(v: &[BigRational]) -> String {
    let s: Vec<String> = v.iter().map(fmt_rational).collect();
    format!("({})", s.join(","))
}

impl fmt::Display for AffineSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vec(&self.point))?;
        for (k, u) in self.dirs.iter().enumerate() {
            write!(f, " + s{}{}", k + 1, fmt_vec(u))?;
        }
        Ok(())
    }
}

/// A finite union of affine subspaces, none contained in another, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubspaceArrangement {
    components: Vec<AffineSubspace>,
}

impl SubspaceArrangement {
    pub fn new(parts: impl IntoIterator<Item = AffineSubspace>) -> Self {
        let mut parts: Vec<AffineSubspace> = parts.into_iter().collect();
        parts.sort();
        parts.dedup();
        let keep: Vec<AffineSubspace> = parts
            .iter()
            .enumerate()
            .filter(|(i, c)| {
                !parts
                    .iter()
                    .enumerate()
                    .any(|(j, o)| *i != j && o.dim() > c.dim() && o.contains(c))
            })
            .map(|(_, c)| c.clone())
            .collect();
        SubspaceArrangement { components: keep }
    }

    pub fn components(&self) -> &[AffineSubspace] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn intersect(&self, other: &SubspaceArrangement) -> SubspaceArrangement {
        Self::new(
            self.components
                .iter()
                .flat_map(|a| other.components.iter().filter_map(move |b| a.intersect(b))),
        )
    }

    pub fn contains_point(&self, x: &[BigRational]) -> bool {
        self.components.iter().any(|c| c.contains_point(x))
    }

    /// Whether some component contains `s` entirely.
    pub fn covers(&self, s: &AffineSubspace) -> bool {
        self.components.iter().any(|c| c.contains(s))
    }
}

impl fmt::Display for SubspaceArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = AffineSubspace::from_ints(&[1, 0, -1], &[vec![1, 0, -2]]);
        let b = AffineSubspace::from_ints(&[3, 0, -5], &[vec![-2, 0, 4]]);
        assert_eq!(a, b);
        assert_eq!(a.point(), q(&[0, 0, 1]).as_slice());
    }

    #[test]
    fn line_meets_plane_in_point() {
        let line = AffineSubspace::from_ints(&[1, 0, -1], &[vec![1, 0, -2]]);
        let plane = AffineSubspace::from_ints(&[0, 0, 0], &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(line.intersect(&plane), Some(AffineSubspace::point_of(&[0, 0, 1])));
        let parallel = AffineSubspace::from_ints(&[1, 1, -1], &[vec![1, 0, -2]]);
        assert_eq!(line.intersect(&parallel), None);
    }

    #[test]
    fn parameters_round_trip() {
        let line = AffineSubspace::from_ints(&[1, 0, -1], &[vec![1, 0, -2]]);
        let x = q(&[4, 0, -7]);
        let s = line.parameters_of(&x).unwrap();
        assert_eq!(line.at(&s), x);
        assert!(line.parameters_of(&q(&[4, 1, -7])).is_none());
    }

    #[test]
    fn arrangement_drops_redundant_components() {
        let line = AffineSubspace::from_ints(&[1, 0, -1], &[vec![1, 0, -2]]);
        let on = AffineSubspace::point_of(&[2, 0, -3]);
        let off = AffineSubspace::point_of(&[0, 0, 0]);
        let arr = SubspaceArrangement::new([on, line.clone(), off.clone(), off.clone()]);
        assert_eq!(arr.components(), &[off, line]);
    }
}
