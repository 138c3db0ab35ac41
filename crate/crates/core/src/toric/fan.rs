//! Enumeration of the monomial initial ideals of a codimension-2 toric ideal.
//!
//! Every binomial of `I_A` has exponent difference `B z` for a unique
//! `z ∈ Z²`, and `ω · (B z) = (Bᵀω) · z`. The Gröbner fan therefore lives in
//! the plane of reduced weights `ω' = Bᵀω`, where it is a complete fan of
//! sectors. Each reduced Gröbner basis cuts out the closed sector
//! `{ω' : ω' · z_g ≥ 0}`; walking from sector to sector counterclockwise
//! across boundary rays visits every monomial initial ideal exactly once.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::binomial::MonomialIdeal;
use super::groebner::{groebner_basis, initial_ideal, lattice_ideal_generators, GroebnerBasis};
use super::order::TermOrder;
use crate::exact::GaleDiagram;

type V = (i128, i128);

fn cross(a: V, b: V) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

fn perp(a: V) -> V {
    (-a.1, a.0)
}

fn primitive(v: V) -> V {
    let g = v.0.gcd(&v.1);
    if g == 0 {
        v
    } else {
        (v.0 / g, v.1 / g)
    }
}

/// A cone of the fan: its monomial initial ideal, the reduced basis, and a
/// weight in the open cone.
#[derive(Clone, Debug)]
pub struct FanCone {
    pub ideal: MonomialIdeal,
    pub witness: Vec<i64>,
    pub basis: GroebnerBasis,
    /// Boundary rays in reduced-weight coordinates, clockwise then counterclockwise.
    pub rays: [[i64; 2]; 2],
}

/// Integer weight `ω` with `Bᵀω` a positive multiple of `ω'`.
pub fn lift(b: &GaleDiagram, wp: [i64; 2]) -> Vec<i64> {
    // ω = B · adj(BᵀB) · ω'
    let rows = b.rows();
    let mut g = [[0i128; 2]; 2];
    for r in rows {
        for i in 0..2 {
            for j in 0..2 {
                g[i][j] += r[i] as i128 * r[j] as i128;
            }
        }
    }
    let adj = [[g[1][1], -g[0][1]], [-g[1][0], g[0][0]]];
    let c = [
        adj[0][0] * wp[0] as i128 + adj[0][1] * wp[1] as i128,
        adj[1][0] * wp[0] as i128 + adj[1][1] * wp[1] as i128,
    ];
    let w: Vec<BigInt> = rows
        .iter()
        .map(|r| BigInt::from(r[0] as i128 * c[0] + r[1] as i128 * c[1]))
        .collect();
    let gcd = w.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    w.iter()
        .map(|x| {
            let y = if gcd.is_zero() { x.clone() } else { x / &gcd };
            y.to_i64().expect("lifted weight fits in i64")
        })
        .collect()
}

/// Reduced weight `Bᵀω`.
pub fn reduce_weight(b: &GaleDiagram, w: &[i64]) -> [i64; 2] {
    let mut out = [0i64; 2];
    for (r, x) in b.rows().iter().zip(w) {
        out[0] += r[0] * x;
        out[1] += r[1] * x;
    }
    out
}

/// Lattice coordinates `z` of each basis element (`plus - minus = B z`).
fn lattice_coords(b: &GaleDiagram, gb: &GroebnerBasis) -> Vec<V> {
    gb.elements()
        .iter()
        .map(|g| {
            let z = b
                .coordinates_of(&g.vector())
                .expect("basis element lies in the lattice");
            (z[0] as i128, z[1] as i128)
        })
        .collect()
}

/// First boundary ray met when rotating counterclockwise from `r + εs`.
fn ccw_boundary(normals: &[V], r: V, s: V) -> V {
    let ahead = |c: V| {
        let x = cross(r, c);
        if x != 0 {
            x > 0
        } else {
            cross(s, c) > 0
        }
    };
    let cands: Vec<V> = normals
        .iter()
        .map(|&z| {
            let c = primitive(perp(z));
            if ahead(c) {
                c
            } else {
                (-c.0, -c.1)
            }
        })
        .collect();
    *cands
        .iter()
        .find(|&&c| cands.iter().all(|&d| cross(c, d) >= 0))
        .expect("a sector has a counterclockwise boundary")
}

/// Gröbner basis for the order `(lift(r), lift(s))`, i.e. reduced weight `r + εs`.
fn basis_near(b: &GaleDiagram, gens: &[super::binomial::Binomial], r: V, s: V) -> GroebnerBasis {
    let to = |v: V| [v.0 as i64, v.1 as i64];
    let order = TermOrder::new(vec![lift(b, to(r)), lift(b, to(s))]);
    groebner_basis(gens, &order)
}

/// All monomial initial ideals of `I_A`, each with a witness weight, in
/// counterclockwise order starting from the reduced weight `start`.
pub fn walk_from(b: &GaleDiagram, start: [i64; 2]) -> Vec<FanCone> {
    let gens = lattice_ideal_generators(b);
    let mut r: V = primitive((start[0] as i128, start[1] as i128));
    let mut s: V = perp(r);
    let mut out: Vec<FanCone> = Vec::new();
    let mut cw_of_current: Option<V> = None;
    loop {
        let gb = basis_near(b, &gens, r, s);
        let ideal = gb.leading_ideal();
        if out.first().is_some_and(|c| c.ideal == ideal) {
            // closed the loop; the first cone's clockwise ray is the last crossing
            let last = cw_of_current.expect("at least one crossing");
            let first = &mut out[0];
            first.rays[0] = [last.0 as i64, last.1 as i64];
            break;
        }
        let normals = lattice_coords(b, &gb);
        let ccw = ccw_boundary(&normals, r, s);
        let cw = cw_of_current.unwrap_or(r);
        out.push(FanCone {
            ideal,
            witness: Vec::new(),
            basis: gb,
            rays: [[cw.0 as i64, cw.1 as i64], [ccw.0 as i64, ccw.1 as i64]],
        });
        cw_of_current = Some(ccw);
        r = ccw;
        s = perp(ccw);
        assert!(out.len() <= 10_000, "fan walk did not close");
    }
    for cone in &mut out {
        let p = (cone.rays[0][0] as i128, cone.rays[0][1] as i128);
        let q = (cone.rays[1][0] as i128, cone.rays[1][1] as i128);
        let inner = if cross(p, q) > 0 {
            primitive((p.0 + q.0, p.1 + q.1))
        } else {
            perp(p)
        };
        cone.witness = lift(b, [inner.0 as i64, inner.1 as i64]);
    }
    out
}

/// Monomial initial ideals in canonical order (sorted by generators).
pub fn groebner_fan_monomial_initial_ideals(b: &GaleDiagram) -> Vec<FanCone> {
    let mut cones = walk_from(b, [1, 0]);
    cones.sort_by(|x, y| x.ideal.cmp(&y.ideal));
    cones
}

/// The witness weight reproduces the ideal from a basis for that weight.
pub fn witness_reproduces(b: &GaleDiagram, cone: &FanCone) -> bool {
    let gens = lattice_ideal_generators(b);
    let gb = groebner_basis(&gens, &TermOrder::new(vec![cone.witness.clone()]));
    match initial_ideal(&gb, &cone.witness) {
        Ok(init) => init.monomial_ideal().as_ref() == Some(&cone.ideal),
        Err(_) => false,
    }
}

/// Reduced weight lies strictly inside the cone.
pub fn in_open_cone(cone: &FanCone, wp: [i64; 2]) -> bool {
    let p = (cone.rays[0][0] as i128, cone.rays[0][1] as i128);
    let q = (cone.rays[1][0] as i128, cone.rays[1][1] as i128);
    let w = (wp[0] as i128, wp[1] as i128);
    if w == (0, 0) {
        return false;
    }
    if cross(p, q) > 0 {
        cross(p, w) > 0 && cross(w, q) > 0
    } else {
        // half-plane: q = -p
        cross(p, w) > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer_kernel_basis, Configuration};

    fn a5_diagram() -> GaleDiagram {
        GaleDiagram::from_rows(vec![[1, 2], [-1, 1], [-1, -1], [1, -1], [0, -1]])
    }

    #[test]
    fn lift_reduces_back() {
        let b = a5_diagram();
        for wp in [[1, 0], [0, 1], [3, -2], [-5, 7]] {
            let w = lift(&b, wp);
            let r = reduce_weight(&b, &w);
            assert_eq!(r[0] * wp[1] - r[1] * wp[0], 0);
            assert!(r[0] * wp[0] + r[1] * wp[1] > 0);
        }
    }

    #[test]
    fn nine_initial_ideals_for_the_plane_example() {
        let cones = groebner_fan_monomial_initial_ideals(&a5_diagram());
        assert_eq!(cones.len(), 9);
        for c in &cones {
            assert!(witness_reproduces(&a5_diagram(), c));
        }
    }

    #[test]
    fn walk_is_independent_of_start() {
        let a = Configuration::new(vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]]).unwrap();
        let b = integer_kernel_basis(&a).unwrap();
        let mut x: Vec<MonomialIdeal> = walk_from(&b, [1, 0]).into_iter().map(|c| c.ideal).collect();
        let mut y: Vec<MonomialIdeal> = walk_from(&b, [-3, 5]).into_iter().map(|c| c.ideal).collect();
        x.sort();
        y.sort();
        assert_eq!(x, y);
    }
}
