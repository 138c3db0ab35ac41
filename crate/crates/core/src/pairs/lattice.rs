//! Standard pairs of a codimension-2 initial ideal through lattice programs.
//!
//! For `in_≺(I_A)`, a monomial `x^m` is standard iff no `z ≠ 0` has
//! `m - Bz ≥ 0` with `Bz` improving, i.e. `(ω_1·Bz, ω_2·Bz, …) >_lex 0`
//! along the weights of `≺` followed by its lexicographic tie-break. Hence
//! `(η, σ)` is a standard pair iff the improving integer points with
//! `(Bz)_i ≤ η_i` (`i ∉ σ`) are empty, and each constraint, when dropped,
//! admits one. The improving set splits into the pieces
//! `{c_1·z = 0, …, c_{k-1}·z = 0, c_k·z ≥ 1}` with `c_k = Bᵀω_k`.

use super::polyhedron::{integer_points_2d, HalfPlane, Polyhedron2D};
use super::standard::StandardPair;
use crate::exact::GaleDiagram;
use crate::toric::order::TermOrder;

/// Reduced weights `Bᵀω` of a term order, the lexicographic tie-break
/// appended, truncated once they span the plane.
pub fn reduced_chain(b: &GaleDiagram, order: &TermOrder) -> Vec<[i64; 2]> {
    let n = b.n();
    let mut full: Vec<Vec<i64>> = order.chain().to_vec();
    full.extend((0..n).map(|i| crate::toric::order::unit(n, i, 1)));
    let mut out: Vec<[i64; 2]> = Vec::new();
    for w in full {
        let c = crate::toric::fan::reduce_weight(b, &w);
        if c == [0, 0] {
            continue;
        }
        let independent = out.iter().any(|p| p[0] * c[1] - p[1] * c[0] != 0);
        out.push(c);
        if independent {
            break;
        }
    }
    out
}

/// Pieces whose union is the set of improving integer `z`.
pub fn improving_pieces(chain: &[[i64; 2]]) -> Vec<Polyhedron2D> {
    (0..chain.len())
        .map(|k| {
            let mut p = Polyhedron2D::default();
            for c in &chain[..k] {
                p.push(HalfPlane::le(*c, 0));
                p.push(HalfPlane::ge(*c, 0));
            }
            p.push(HalfPlane::ge(chain[k], 1));
            p
        })
        .collect()
}

/// An improving `z` with `(Bz)_i ≤ bound_i` for each listed `(i, bound_i)`.
pub fn improving_point(b: &GaleDiagram, pieces: &[Polyhedron2D], bounds: &[(usize, i64)]) -> Option<[i64; 2]> {
    pieces.iter().find_map(|piece| {
        let mut p = piece.clone();
        for &(i, c) in bounds {
            p.push(HalfPlane::le(b.rows()[i], c));
        }
        integer_points_2d(&p).point()
    })
}

/// Lattice-program verdict on a candidate pair, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeVerdict {
    /// `None` when the stratum is standard; else an improving point.
    pub obstruction: Option<[i64; 2]>,
    /// For each `l ∉ σ`, an improving point once `(Bz)_l ≤ η_l` is dropped.
    pub maximality: Vec<(usize, Option<[i64; 2]>)>,
}

impl LatticeVerdict {
    pub fn is_standard_pair(&self) -> bool {
        self.obstruction.is_none() && self.maximality.iter().all(|(_, z)| z.is_some())
    }
}

pub fn lattice_verdict(b: &GaleDiagram, order: &TermOrder, pair: &StandardPair) -> LatticeVerdict {
    let pieces = improving_pieces(&reduced_chain(b, order));
    let outside: Vec<usize> = (0..b.n()).filter(|i| !pair.in_sigma(*i)).collect();
    let bounds: Vec<(usize, i64)> = outside.iter().map(|&i| (i, pair.eta[i])).collect();
    let obstruction = improving_point(b, &pieces, &bounds);
    let maximality = outside
        .iter()
        .map(|&l| {
            let fewer: Vec<(usize, i64)> = bounds.iter().copied().filter(|(i, _)| *i != l).collect();
            (l, improving_point(b, &pieces, &fewer))
        })
        .collect();
    LatticeVerdict {
        obstruction,
        maximality,
    }
}

pub fn is_standard_pair_lattice(b: &GaleDiagram, order: &TermOrder, pair: &StandardPair) -> bool {
    pair.sigma.iter().all(|&i| pair.eta[i] == 0) && lattice_verdict(b, order, pair).is_standard_pair()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::standard::standard_pairs;
    use crate::toric::fan::groebner_fan_monomial_initial_ideals;

    #[test]
    fn agrees_with_definition_on_every_initial_ideal() {
        let b = GaleDiagram::from_rows(vec![[1, 2], [-1, 1], [-1, -1], [1, -1], [0, -1]]);
        for cone in groebner_fan_monomial_initial_ideals(&b) {
            let order = cone.basis.order().clone();
            for p in standard_pairs(&cone.ideal) {
                assert!(is_standard_pair_lattice(&b, &order, &p), "{p}");
                // perturbing η breaks the pair
                for i in 0..5 {
                    if !p.in_sigma(i) {
                        let mut q = p.clone();
                        q.eta[i] += 1;
                        let direct = standard_pairs(&cone.ideal).contains(&q);
                        assert_eq!(direct, is_standard_pair_lattice(&b, &order, &q));
                    }
                }
            }
        }
    }
}
