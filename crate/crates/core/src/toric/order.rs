use std::cmp::Ordering;

/// A term order: total degree, then a chain of integer weight vectors, then
/// lexicographic with `x_1 > x_2 > … > x_n`.
///
/// Comparing total degree first keeps the order a well-order even for
/// negative weights; on homogeneous ideals (first row of `A` all ones) it
/// never decides between two terms of the same binomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    chain: Vec<Vec<i64>>,
}

pub fn dot(w: &[i64], e: &[i64]) -> i128 {
    w.iter().zip(e).map(|(a, b)| *a as i128 * *b as i128).sum()
}

pub fn unit(n: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

impl TermOrder {
    pub fn new(chain: Vec<Vec<i64>>) -> Self {
        TermOrder { chain }
    }

    /// Degree-lexicographic order (empty chain).
    pub fn graded_lex() -> Self {
        TermOrder { chain: Vec::new() }
    }

    /// Degree then reverse lexicographic with `x_cheap` the smallest variable.
    pub fn revlex_cheapest(n: usize, cheap: usize) -> Self {
        let mut chain = vec![unit(n, cheap, -1)];
        chain.extend((0..n).rev().filter(|&j| j != cheap).map(|j| unit(n, j, -1)));
        TermOrder { chain }
    }

    pub fn chain(&self) -> &[Vec<i64>] {
        &self.chain
    }

    /// Compare by the weight chain only; `Equal` means a tie the chain
    /// does not break.
    pub fn cmp_chain(&self, a: &[i64], b: &[i64]) -> Ordering {
        self.chain
            .iter()
            .map(|w| dot(w, a).cmp(&dot(w, b)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    pub fn cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        let da: i64 = a.iter().sum();
        let db: i64 = b.iter().sum();
        da.cmp(&db).then_with(|| self.cmp_chain(a, b)).then_with(|| a.cmp(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_then_lex() {
        let o = TermOrder::new(vec![vec![0, 0, -1]]);
        // x1*x3 vs x2^2: weight -1 vs 0
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[2, 0, 0], &[0, 2, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 0, 2]), Ordering::Less);
    }

    #[test]
    fn revlex_cheapest_variable() {
        let o = TermOrder::revlex_cheapest(3, 0);
        // any monomial divisible by x1 loses to one of the same degree that is not
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[0, 0, 2], &[0, 1, 1]), Ordering::Less);
    }
}
