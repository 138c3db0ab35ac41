//! Brute-force oracles shared by the integration targets. Each one decides
//! its question straight from the definition, by bounded enumeration.
#![allow(dead_code)]

use std::collections::BTreeSet;

use gkz_core::exact::{Configuration, GaleDiagram, ParamVector};
use gkz_core::hyper::nsupp::{negative_support, shift};
use gkz_core::pairs::{Polyhedron2D, StandardPair};
use gkz_core::toric::MonomialIdeal;

pub fn a5() -> Configuration {
    Configuration::new(vec![vec![1, 1, 1, 1, 1], vec![0, 1, 0, 1, 0], vec![0, 0, 1, 1, -2]]).unwrap()
}

pub fn a2() -> Configuration {
    Configuration::new(vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]]).unwrap()
}

pub fn a6() -> Configuration {
    Configuration::new(vec![
        vec![1, 1, 1, 1, 1, 1],
        vec![0, 0, 0, 0, -2, 1],
        vec![1, 0, 0, 1, 0, 0],
        vec![1, 0, 2, 0, 1, 1],
    ])
    .unwrap()
}

pub fn twisted_cubic() -> Configuration {
    Configuration::new(vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

fn box_points(n: usize, top: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=top).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// `η·k[x_σ]` misses `M`: no generator divides `η` off `σ`.
fn stratum_avoids(m: &MonomialIdeal, eta: &[i64], sigma: &[usize]) -> bool {
    m.generators()
        .iter()
        .all(|g| !g.iter().enumerate().all(|(i, &x)| sigma.contains(&i) || x <= eta[i]))
}

/// `η·k[x_σ] ⊆ η'·k[x_σ']`.
fn stratum_inside(eta: &[i64], sigma: &[usize], eta2: &[i64], sigma2: &[usize]) -> bool {
    sigma.iter().all(|i| sigma2.contains(i))
        && (0..eta.len()).all(|i| {
            if sigma2.contains(&i) {
                eta2[i] <= eta[i]
            } else {
                eta2[i] == eta[i]
            }
        })
}

/// Standard pairs straight from the definition: admissible strata avoiding
/// `M`, maximal under inclusion. Every `η` of a standard pair is bounded by
/// the largest generator exponent, so the box `[0, top]^n` suffices.
pub fn standard_pairs_by_definition(m: &MonomialIdeal, top: i64) -> BTreeSet<StandardPair> {
    let n = m.n();
    let mut admissible = Vec::new();
    for sigma in subsets(n) {
        for eta in box_points(n, top) {
            if sigma.iter().all(|&i| eta[i] == 0) && stratum_avoids(m, &eta, &sigma) {
                admissible.push((eta, sigma.clone()));
            }
        }
    }
    admissible
        .iter()
        .filter(|(e, s)| {
            !admissible
                .iter()
                .any(|(e2, s2)| (e2, s2) != (e, s) && stratum_inside(e, s, e2, s2))
        })
        .map(|(e, s)| StandardPair::new(e.clone(), s.clone()))
        .collect()
}

/// Minimum negative support by scanning every shift `z` with `|z|∞ ≤ r`.
pub fn mns_by_box(x: &ParamVector, b: &GaleDiagram, r: i64) -> bool {
    let s = negative_support(x);
    for z0 in -r..=r {
        for z1 in -r..=r {
            let t = negative_support(&shift(x, b, [z0, z1]));
            if t.len() < s.len() && t.is_subset(&s) {
                return false;
            }
        }
    }
    true
}

/// Lattice points of `p` in `[-r, r]²` by the half-plane test alone.
pub fn lattice_points_by_box(p: &Polyhedron2D, r: i64) -> Vec<[i64; 2]> {
    let mut out = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            if p.halfplanes.iter().all(|h| h.contains([x, y])) {
                out.push([x, y]);
            }
        }
    }
    out
}
