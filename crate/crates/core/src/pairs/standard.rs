//! Standard pairs of monomial ideals.
//!
//! For a fixed `σ`, write `M_σ` for the image of `M` under `x_i ↦ 1`
//! (`i ∈ σ`). Then `(x^η, σ)` is a standard pair exactly when `η` vanishes on
//! `σ`, `η ∉ M_σ`, and for every `l ∉ σ` the monomial `η` lies in
//! `M_σ : x_l^∞`. A standard pair's `η_l` never exceeds the largest power of
//! `x_l` among the generators of `M_σ`, so each `σ` has a finite box of
//! candidates.

use std::fmt;

use crate::toric::binomial::{fmt_monomial, Exponent, MonomialIdeal};

/// `(∂^η, σ)` with `σ` a sorted set of 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardPair {
    pub eta: Exponent,
    pub sigma: Vec<usize>,
}

impl StandardPair {
    pub fn new(eta: Exponent, mut sigma: Vec<usize>) -> Self {
        sigma.sort_unstable();
        sigma.dedup();
        StandardPair { eta, sigma }
    }

    pub fn in_sigma(&self, i: usize) -> bool {
        self.sigma.binary_search(&i).is_ok()
    }

    /// Whether `x^m` lies in the stratum `x^η · k[x_σ]`.
    pub fn covers(&self, m: &[i64]) -> bool {
        m.iter()
            .zip(&self.eta)
            .enumerate()
            .all(|(i, (a, b))| if self.in_sigma(i) { true } else { a == b })
    }
}

impl fmt::Display for StandardPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.sigma.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "({}, {{{}}})", fmt_monomial(&self.eta), s.join(","))
    }
}

fn restricted(m: &MonomialIdeal, sigma_mask: u64) -> Vec<Exponent> {
    m.generators()
        .iter()
        .map(|g| {
            g.iter()
                .enumerate()
                .map(|(i, &x)| if sigma_mask >> i & 1 == 1 { 0 } else { x })
                .collect()
        })
        .collect()
}

/// `m ∈ ⟨gens⟩` ignoring coordinate `skip`.
fn in_ideal_except(gens: &[Exponent], m: &[i64], skip: Option<usize>) -> bool {
    gens.iter()
        .any(|g| g.iter().zip(m).enumerate().all(|(i, (a, b))| Some(i) == skip || a <= b))
}

/// All standard pairs of `M`, sorted by `(σ, η)`.
pub fn standard_pairs(m: &MonomialIdeal) -> Vec<StandardPair> {
    let n = m.n();
    assert!(n < 64);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let gens = restricted(m, mask);
        let free: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let bounds: Vec<i64> = free
            .iter()
            .map(|&l| gens.iter().map(|g| g[l]).max().unwrap_or(0))
            .collect();
        let mut eta = vec![0i64; n];
        loop {
            let standard = !in_ideal_except(&gens, &eta, None);
            if standard && free.iter().all(|&l| in_ideal_except(&gens, &eta, Some(l))) {
                let sigma = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                out.push(StandardPair::new(eta.clone(), sigma));
            }
            // odometer over the box
            let mut k = 0;
            loop {
                if k == free.len() {
                    break;
                }
                let l = free[k];
                if eta[l] < bounds[k] {
                    eta[l] += 1;
                    break;
                }
                eta[l] = 0;
                k += 1;
            }
            if k == free.len() {
                break;
            }
        }
    }
    out.sort_by(|a, b| (a.sigma.len(), &a.sigma, &a.eta).cmp(&(b.sigma.len(), &b.sigma, &b.eta)));
    out
}

/// Number of pairs with `|σ| = d`.
pub fn top_pair_count(pairs: &[StandardPair], d: usize) -> usize {
    pairs.iter().filter(|p| p.sigma.len() == d).count()
}

/// Pairs with `|σ| < d`, which witness embedded primes `⟨x_i : i ∉ σ⟩`.
pub fn embedded_pairs(pairs: &[StandardPair], d: usize) -> Vec<StandardPair> {
    pairs.iter().filter(|p| p.sigma.len() < d).cloned().collect()
}

/// Associated primes, each as the sorted set of variables `{i : i ∉ σ}`.
pub fn associated_primes(pairs: &[StandardPair], n: usize) -> Vec<Vec<usize>> {
    let mut primes: Vec<Vec<usize>> = pairs
        .iter()
        .map(|p| (0..n).filter(|i| !p.in_sigma(*i)).collect())
        .collect();
    primes.sort();
    primes.dedup();
    primes
}

/// Whether `x^m` is standard, via the pair strata.
pub fn covered(pairs: &[StandardPair], m: &[i64]) -> bool {
    pairs.iter().any(|p| p.covers(m))
}
