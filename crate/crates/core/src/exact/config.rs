use num_traits::One;

use super::intmat::{gcd_of_maximal_minors, rank_i64};
use crate::error::{Error, Invariant, Result};

/// A d×n integer matrix whose columns are points of `{1} × Z^{d-1}`,
/// of full rank, codimension two, spanning `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    rows: Vec<Vec<i64>>,
}

fn violation(which: Invariant, detail: impl Into<String>) -> Error {
    Error::InvariantViolation {
        which,
        detail: detail.into(),
    }
}

impl Configuration {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(violation(Invariant::Shape, "empty matrix"));
        }
        let n = rows[0].len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(violation(Invariant::Shape, "rows have different lengths"));
        }
        if rows[0].iter().any(|&x| x != 1) {
            return Err(violation(
                Invariant::FirstRowOnes,
                format!("first row is {:?}", rows[0]),
            ));
        }
        if n != d + 2 {
            return Err(violation(
                Invariant::Codim,
                format!("n - d = {} - {} = {}, expected 2", n, d, n as i64 - d as i64),
            ));
        }
        let r = rank_i64(&rows);
        if r != d {
            return Err(violation(Invariant::Rank, format!("rank is {r}, expected {d}")));
        }
        let g = gcd_of_maximal_minors(&rows);
        if !g.is_one() {
            return Err(violation(
                Invariant::LatticeSpan,
                format!("gcd of maximal minors is {g}, columns span a sublattice"),
            ));
        }
        Ok(Configuration { rows })
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Column `k` of the result is column `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Configuration {
        Configuration {
            rows: self.rows.iter().map(|r| perm.iter().map(|&j| r[j]).collect()).collect(),
        }
    }

    /// `A · u` for an integer vector.
    pub fn apply(&self, u: &[i64]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(u).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl std::fmt::Display for Configuration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{} {}", self.d(), self.n())?;
        for r in &self.rows {
            let s: Vec<String> = r.iter().map(i64::to_string).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_each_invariant() {
        let which = |rows: Vec<Vec<i64>>| match Configuration::new(rows) {
            Err(Error::InvariantViolation { which, .. }) => Some(which),
            _ => None,
        };
        assert_eq!(
            which(vec![vec![1, 1, 2, 1], vec![0, 1, 2, 3]]),
            Some(Invariant::FirstRowOnes)
        );
        assert_eq!(which(vec![vec![1, 1, 1], vec![0, 1, 2]]), Some(Invariant::Codim));
        assert_eq!(
            which(vec![vec![1, 1, 1, 1, 1], vec![0, 1, 2, 3, 4], vec![0, 2, 4, 6, 8]]),
            Some(Invariant::Rank)
        );
        assert_eq!(
            which(vec![vec![1, 1, 1, 1], vec![0, 2, 4, 6]]),
            Some(Invariant::LatticeSpan)
        );
        assert!(Configuration::new(vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]]).is_ok());
    }
}
