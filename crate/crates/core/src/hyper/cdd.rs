//! Exceptional sets of projective monomial curves (`d = 2`).
//!
//! With columns `(1, a_i)`, `0 = a_1 < … < a_n`, the exceptional set is
//! `((NA + Z(1,0)) ∩ (NA + Z(1,a_n))) \ NA`. Membership in either shifted
//! semigroup reduces to membership of a single point of `NA`:
//! `x ∈ NA + Z(1,0)` iff `x₂ ≥ 0` and `(x₂, x₂) ∈ NA`, since a representation
//! of `x₂` needs at most `x₂` nonzero summands; symmetrically
//! `x ∈ NA + Z(1,a_n)` iff `h = a_n x₁ - x₂ ≥ 0` and `(h, (a_n - 1)h) ∈ NA`.

use crate::error::{Error, Result};
use crate::exact::Configuration;

/// The second row of a `d = 2` configuration, validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    a: Vec<i64>,
}

impl Curve {
    pub fn new(mut a: Vec<i64>) -> Result<Self> {
        a.sort_unstable();
        a.dedup();
        if a.len() < 2 || a[0] != 0 {
            return Err(Error::Precondition(
                "second row must start at 0 and have two distinct entries".into(),
            ));
        }
        let g = a.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
        if g != 1 {
            return Err(Error::Precondition("second row entries must have gcd 1".into()));
        }
        Ok(Curve { a })
    }

    pub fn from_configuration(c: &Configuration) -> Result<Self> {
        if c.d() != 2 {
            return Err(Error::Precondition(format!("expected d = 2, got {}", c.d())));
        }
        let row = c.rows()[1].clone();
        let mut sorted = row.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != row.len() {
            return Err(Error::Precondition("columns must be distinct".into()));
        }
        Curve::new(row)
    }

    pub fn degree(&self) -> i64 {
        *self.a.last().expect("nonempty")
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    /// Is `β` an N-combination of the columns?
    pub fn member(&self, beta: [i64; 2]) -> bool {
        Members::up_to(self, beta[0].max(0)).contains(beta)
    }

    pub fn in_first_shift(&self, x: [i64; 2]) -> bool {
        Members::up_to(self, self.shift_degree(x)).in_first_shift(x)
    }

    pub fn in_last_shift(&self, x: [i64; 2]) -> bool {
        Members::up_to(self, self.shift_degree(x)).in_last_shift(self.degree(), x)
    }

    pub fn is_exceptional(&self, beta: [i64; 2]) -> bool {
        Members::up_to(self, self.shift_degree(beta)).is_exceptional(self.degree(), beta)
    }

    /// Largest degree queried by the shift tests at `x`.
    fn shift_degree(&self, x: [i64; 2]) -> i64 {
        x[0].max(x[1]).max(self.degree() * x[0] - x[1]).max(0)
    }

    /// Minimal generators of `C[NA]` over `C[s, t]`, `s, t` the extreme
    /// columns: members `x` with neither `x - (1,0)` nor `x - (1,a_n)` in
    /// `NA`. Each has degree below `a_n`: among `a_n` summands two partial
    /// sums agree mod `a_n`, and the block between them can be traded for
    /// extreme columns.
    pub fn module_generators(&self) -> Vec<[i64; 2]> {
        let an = self.degree();
        let m = Members::up_to(self, an);
        let mut out = Vec::new();
        for k in 0..an {
            for y in 0..=an * k {
                let x = [k, y];
                if m.contains(x) && !m.contains([k - 1, y]) && !m.contains([k - 1, y - an]) {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Cohen–Macaulay iff `C[NA]` is free over `C[s, t]`, i.e. has exactly
    /// `a_n` minimal generators.
    pub fn is_cohen_macaulay(&self) -> bool {
        self.module_generators().len() as i64 == self.degree()
    }

    /// Largest degree an exceptional point can have: every point of both
    /// shifts is a generator plus extreme columns, shifted by one generator.
    pub fn degree_bound(&self) -> i64 {
        (2 * self.degree() - 2).max(0)
    }

    /// All of `ℰ(A)`, sorted.
    pub fn exceptional_set(&self) -> Vec<[i64; 2]> {
        self.exceptional_in_box(self.degree_bound())
    }

    pub fn exceptional_in_box(&self, max_degree: i64) -> Vec<[i64; 2]> {
        let an = self.degree();
        let m = Members::up_to(self, an * max_degree.max(0));
        (0..=max_degree)
            .flat_map(|k| (0..=an * k).map(move |y| [k, y]))
            .filter(|x| m.is_exceptional(an, *x))
            .collect()
    }
}

/// Membership in `NA` for every point of degree at most `rows.len() - 1`.
/// Row `k` holds the sums of exactly `k` entries.
struct Members {
    rows: Vec<Vec<bool>>,
}

impl Members {
    fn up_to(curve: &Curve, max_degree: i64) -> Self {
        let an = curve.degree() as usize;
        let mut rows = vec![vec![true]];
        for k in 1..=max_degree as usize {
            let prev = &rows[k - 1];
            let mut next = vec![false; an * k + 1];
            for (s, _) in prev.iter().enumerate().filter(|(_, r)| **r) {
                for &x in &curve.a {
                    next[s + x as usize] = true;
                }
            }
            rows.push(next);
        }
        Members { rows }
    }

    fn contains(&self, [k, y]: [i64; 2]) -> bool {
        k >= 0
            && y >= 0
            && self
                .rows
                .get(k as usize)
                .and_then(|r| r.get(y as usize))
                .copied()
                .unwrap_or(false)
    }

    fn in_first_shift(&self, x: [i64; 2]) -> bool {
        x[1] >= 0 && self.contains([x[1], x[1]])
    }

    fn in_last_shift(&self, an: i64, x: [i64; 2]) -> bool {
        let h = an * x[0] - x[1];
        h >= 0 && self.contains([h, (an - 1) * h])
    }

    fn is_exceptional(&self, an: i64, x: [i64; 2]) -> bool {
        self.in_first_shift(x) && self.in_last_shift(an, x) && !self.contains(x)
    }
}

pub fn semigroup_member_d2(a: &Configuration, beta: [i64; 2]) -> Result<bool> {
    Ok(Curve::from_configuration(a)?.member(beta))
}

pub fn cdd_exceptional_d2(a: &Configuration, beta: [i64; 2]) -> Result<bool> {
    Ok(Curve::from_configuration(a)?.is_exceptional(beta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: &[i64]) -> Curve {
        Curve::new(a.to_vec()).unwrap()
    }

    #[test]
    fn semigroup_examples() {
        let c = curve(&[0, 1, 3, 4]);
        assert!(c.member([2, 2]));
        assert!(!c.member([1, 2]));
        assert!(c.member([0, 0]));
        assert!(!c.member([-1, 0]));
    }

    #[test]
    fn quartic_curve_exceptional_set() {
        let c = curve(&[0, 1, 3, 4]);
        assert!(c.is_exceptional([1, 2]));
        assert!(!c.is_exceptional([1, 0]));
        assert_eq!(c.exceptional_set(), vec![[1, 2]]);
        assert!(!c.is_cohen_macaulay());
        assert_eq!(c.exceptional_in_box(20), vec![[1, 2]]);
    }

    #[test]
    fn twisted_cubic_is_clean() {
        let c = curve(&[0, 1, 2, 3]);
        assert!(c.exceptional_in_box(15).is_empty());
        assert!(c.is_cohen_macaulay());
    }

    #[test]
    fn preconditions() {
        assert!(Curve::new(vec![0, 2, 4]).is_err());
        assert!(Curve::new(vec![1, 2]).is_err());
    }
}
