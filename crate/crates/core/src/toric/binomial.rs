//! Exponent vectors, binomials and monomial ideals.

use std::fmt;

use crate::exact::Configuration;

/// A monomial `x^e` stored by its (nonnegative) exponent vector.
pub type Exponent = Vec<i64>;

pub fn divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[i64], b: &[i64]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn degree(a: &[i64]) -> i64 {
    a.iter().sum()
}

pub fn add(a: &[i64], b: &[i64]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Positive and negative parts `(u₊, u₋)` with `u = u₊ - u₋`.
pub fn split(u: &[i64]) -> (Exponent, Exponent) {
    (
        u.iter().map(|&x| x.max(0)).collect(),
        u.iter().map(|&x| (-x).max(0)).collect(),
    )
}

pub fn fmt_monomial(e: &[i64]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("d{}", i + 1)
            } else {
                format!("d{}^{}", i + 1, k)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// `∂^plus - ∂^minus`, monic on both sides. Inside a Gröbner basis `plus` is
/// the leading term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: Exponent,
    pub minus: Exponent,
}

impl Binomial {
    pub fn new(plus: Exponent, minus: Exponent) -> Self {
        assert_eq!(plus.len(), minus.len());
        Binomial { plus, minus }
    }

    /// `∂^{u₊} - ∂^{u₋}` for a lattice vector `u`.
    pub fn from_vector(u: &[i64]) -> Self {
        let (p, m) = split(u);
        Binomial::new(p, m)
    }

    pub fn vector(&self) -> Vec<i64> {
        sub(&self.plus, &self.minus)
    }

    pub fn n(&self) -> usize {
        self.plus.len()
    }

    pub fn has_disjoint_support(&self) -> bool {
        self.plus.iter().zip(&self.minus).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Disjoint supports and `A·plus = A·minus`.
    pub fn is_valid_for(&self, a: &Configuration) -> bool {
        self.has_disjoint_support() && a.apply(&self.plus) == a.apply(&self.minus)
    }

    pub fn flipped(&self) -> Binomial {
        Binomial::new(self.minus.clone(), self.plus.clone())
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", fmt_monomial(&self.plus), fmt_monomial(&self.minus))
    }
}

/// A monomial ideal by its minimal generators, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Exponent>) -> Self {
        let mut all: Vec<Exponent> = gens.into_iter().collect();
        assert!(all.iter().all(|g| g.len() == n && g.iter().all(|&x| x >= 0)));
        all.sort();
        all.dedup();
        let minimal: Vec<Exponent> = all
            .iter()
            .filter(|g| !all.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        MonomialIdeal { n, gens: minimal }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn contains(&self, m: &[i64]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    /// Largest exponent of `x_l` among the generators.
    pub fn max_exponent(&self, l: usize) -> i64 {
        self.gens.iter().map(|g| g[l]).max().unwrap_or(0)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| fmt_monomial(g)).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_generators() {
        let m = MonomialIdeal::new(2, vec![vec![2, 0], vec![1, 1], vec![2, 1], vec![1, 1]]);
        assert_eq!(m.generators(), &[vec![1, 1], vec![2, 0]]);
        assert!(m.contains(&[3, 0]));
        assert!(!m.contains(&[1, 0]));
        assert!(!m.contains(&[0, 7]));
    }

    #[test]
    fn binomial_from_lattice_vector() {
        let b = Binomial::from_vector(&[1, -1, -1, 1, 0]);
        assert_eq!(b.plus, vec![1, 0, 0, 1, 0]);
        assert_eq!(b.minus, vec![0, 1, 1, 0, 0]);
        assert_eq!(b.to_string(), "d1*d4 - d2*d3");
        let a = Configuration::new(vec![vec![1, 1, 1, 1, 1], vec![0, 1, 0, 1, 0], vec![0, 0, 1, 1, -2]]).unwrap();
        assert!(b.is_valid_for(&a));
    }
}
