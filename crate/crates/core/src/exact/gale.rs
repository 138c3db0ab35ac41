//! Gale diagrams of codimension-2 configurations and their normalization.
//!
//! The normal form puts one row in each open quadrant (rows 1..4 in
//! Q1, Q2, Q3, Q4) and, when rows 2 and 4 are independent, makes the cone
//! `{z : (Bz)_2 ≥ 0, (Bz)_4 ≥ 0}` lie in the closed first quadrant.
//!
//! The search over `GL_2(Z)` first walks unimodular matrices by increasing
//! max-norm up to a bound, which gives small deterministic witnesses. If that
//! bounded walk finds nothing, an exact Farey-graph test settles the question,
//! so the decision never depends on the bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::config::Configuration;
use super::intmat::{gcd_of_maximal_minors, hnf_from_right, integer_kernel};
use crate::error::{Error, Result};

/// `U[r][c]`; the columns `(U[0][0], U[1][0])` and `(U[0][1], U[1][1])` are
/// the images of the standard basis.
pub type Unimodular = [[i64; 2]; 2];

pub const IDENTITY: Unimodular = [[1, 0], [0, 1]];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaleDiagram {
    rows: Vec<[i64; 2]>,
    /// Row `k` belongs to column `permutation[k]` of the original matrix.
    permutation: Vec<usize>,
}

impl GaleDiagram {
    pub fn new(rows: Vec<[i64; 2]>, permutation: Vec<usize>) -> Self {
        assert_eq!(rows.len(), permutation.len());
        GaleDiagram { rows, permutation }
    }

    pub fn from_rows(rows: Vec<[i64; 2]>) -> Self {
        let perm = (0..rows.len()).collect();
        GaleDiagram::new(rows, perm)
    }

    pub fn rows(&self) -> &[[i64; 2]] {
        &self.rows
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Column `k` (0 or 1) as a kernel vector.
    pub fn column(&self, k: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[k]).collect()
    }

    /// `B · z`.
    pub fn apply(&self, z: [i64; 2]) -> Vec<i64> {
        self.rows.iter().map(|r| r[0] * z[0] + r[1] * z[1]).collect()
    }

    pub fn max_abs(&self) -> i64 {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|x| x.abs())
            .max()
            .unwrap_or(0)
    }

    pub fn transformed(&self, u: &Unimodular) -> GaleDiagram {
        GaleDiagram {
            rows: self.rows.iter().map(|r| apply_row(*r, u)).collect(),
            permutation: self.permutation.clone(),
        }
    }

    /// `A · B = 0`, with `A` taken in this diagram's column order.
    pub fn is_kernel_of(&self, a: &Configuration) -> bool {
        let ap = a.permuted(&self.permutation);
        (0..2).all(|k| ap.apply(&self.column(k)).iter().all(|&x| x == 0))
    }

    /// gcd of the 2×2 minors is one.
    pub fn is_saturated(&self) -> bool {
        let rows: Vec<Vec<i64>> = self.rows.iter().map(|r| r.to_vec()).collect();
        gcd_of_maximal_minors(&rows) == 1.into()
    }

    /// Solve `B z = x` for an integer vector `x` in the lattice.
    pub fn coordinates_of(&self, x: &[i64]) -> Option<[i64; 2]> {
        // pick two independent rows
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                let (a, b) = (self.rows[i], self.rows[j]);
                let det = a[0] * b[1] - a[1] * b[0];
                if det == 0 {
                    continue;
                }
                let n0 = x[i] * b[1] - a[1] * x[j];
                let n1 = a[0] * x[j] - x[i] * b[0];
                if n0 % det != 0 || n1 % det != 0 {
                    return None;
                }
                let z = [n0 / det, n1 / det];
                return (self.apply(z) == x).then_some(z);
            }
        }
        None
    }
}

fn apply_row(r: [i64; 2], u: &Unimodular) -> [i64; 2] {
    [r[0] * u[0][0] + r[1] * u[1][0], r[0] * u[0][1] + r[1] * u[1][1]]
}

/// Open quadrant index 1..=4, or 0 on an axis.
pub fn quadrant(r: [i64; 2]) -> u8 {
    match (r[0].signum(), r[1].signum()) {
        (1, 1) => 1,
        (-1, 1) => 2,
        (-1, -1) => 3,
        (1, -1) => 4,
        _ => 0,
    }
}

/// HNF-canonical Z-basis of `ker_Z(A)` as a Gale diagram.
pub fn integer_kernel_basis(a: &Configuration) -> Result<GaleDiagram> {
    if a.n() != a.d() + 2 {
        return Err(Error::Precondition(format!(
            "codimension is {}, expected 2",
            a.n() as i64 - a.d() as i64
        )));
    }
    let ker = hnf_from_right(integer_kernel(a.rows()));
    if ker.len() != 2 {
        return Err(Error::Precondition(format!(
            "kernel has rank {}, expected 2",
            ker.len()
        )));
    }
    let small = |x: &BigInt| {
        x.to_i64()
            .ok_or_else(|| Error::Precondition("kernel entry overflow".into()))
    };
    let rows: Result<Vec<[i64; 2]>> = ker[0]
        .iter()
        .zip(&ker[1])
        .map(|(b0, b1)| Ok([small(b0)?, small(b1)?]))
        .collect();
    Ok(GaleDiagram::from_rows(rows?))
}

pub fn default_search_bound(b: &GaleDiagram) -> i64 {
    (10 * b.max_abs()).max(1)
}

/// Result of normalizing a Gale diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    /// Normalized rows; `permutation` maps rows to original columns of `A`.
    pub diagram: GaleDiagram,
    /// `B_normalized = P · B_input · transform` for a row permutation `P`.
    pub transform: Unimodular,
    /// Rows of the input taken, in order, to form the normalized rows.
    pub row_order: Vec<usize>,
    /// Whether the input was found by the bounded search (vs. the exact test).
    pub found_by_search: bool,
}

/// First four-quadrant row choice `(i1, i2, i3, i4)` for the transformed rows.
fn quadrant_rows(rows: &[[i64; 2]]) -> Option<[usize; 4]> {
    let mut pick = [usize::MAX; 4];
    for (i, r) in rows.iter().enumerate() {
        let q = quadrant(*r);
        if q > 0 && pick[(q - 1) as usize] == usize::MAX {
            pick[(q - 1) as usize] = i;
        }
    }
    pick.iter().all(|&i| i != usize::MAX).then_some(pick)
}

/// Unimodular matrices with max-norm at most `bound`, ordered by max-norm and
/// then lexicographically on the entries of `U - I` in the order
/// `(u11, u21, u12, u22)`, compared by magnitude with positive before negative.
fn unimodular_by_norm(bound: i64) -> Vec<(i64, Unimodular)> {
    let mut out: Vec<(i64, [i64; 4])> = Vec::new();
    for u11 in -bound..=bound {
        for u21 in -bound..=bound {
            if u11.gcd(&u21) != 1 {
                continue;
            }
            for u12 in -bound..=bound {
                for det in [1i64, -1] {
                    // u11*u22 - u21*u12 = det
                    let num = det + u21 * u12;
                    if u11 == 0 {
                        // then u21 = ±1 and -u21*u12 = det fixes u12
                        if -u21 * u12 != det {
                            continue;
                        }
                        for u22 in -bound..=bound {
                            let norm = u11.abs().max(u21.abs()).max(u12.abs()).max(u22.abs());
                            out.push((norm, [u11, u21, u12, u22]));
                        }
                    } else if num % u11 == 0 {
                        let u22 = num / u11;
                        if u22.abs() <= bound {
                            let norm = u11.abs().max(u21.abs()).max(u12.abs()).max(u22.abs());
                            out.push((norm, [u11, u21, u12, u22]));
                        }
                    }
                }
            }
        }
    }
    // within a norm shell: closest to the identity first, entrywise
    let key = |x: i64| (x.abs(), x < 0);
    out.sort_by_key(|(norm, [a, b, c, d])| (*norm, [key(a - 1), key(*b), key(*c), key(d - 1)]));
    out.dedup();
    out.into_iter()
        .map(|(norm, [u11, u21, u12, u22])| (norm, [[u11, u12], [u21, u22]]))
        .collect()
}

/// Bounded search for a unimodular transform putting rows in all four open
/// quadrants.
pub fn search_four_quadrants(b: &GaleDiagram, bound: i64) -> Option<(Unimodular, [usize; 4])> {
    // within a norm shell the row order closest to the identity wins
    let mut best: Option<(i64, Unimodular, [usize; 4])> = None;
    for (norm, u) in unimodular_by_norm(bound) {
        if best.as_ref().is_some_and(|(n, _, _)| *n < norm) {
            break;
        }
        let rows: Vec<[i64; 2]> = b.rows.iter().map(|r| apply_row(*r, &u)).collect();
        if let Some(pick) = quadrant_rows(&rows) {
            if best.as_ref().is_none_or(|(_, _, p)| pick < *p) {
                best = Some((norm, u, pick));
            }
        }
    }
    best.map(|(_, u, pick)| (u, pick))
}

// --- exact test via the Farey graph -------------------------------------

type V = (i128, i128);

fn cross(a: V, b: V) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: V, b: V) -> i128 {
    a.0 * b.0 + a.1 * b.1
}

fn primitive(v: V) -> V {
    let g = v.0.gcd(&v.1);
    if g == 0 {
        v
    } else {
        (v.0 / g, v.1 / g)
    }
}

/// Open arc of directions in the projective line, from `p` counterclockwise
/// to `q` (exclusive). `q = -p` encodes the full line minus one point.
#[derive(Clone, Copy, Debug)]
struct Arc {
    p: V,
    q: V,
}

impl Arc {
    fn contains(&self, x: V) -> bool {
        let c = cross(self.p, x);
        if c == 0 {
            return false;
        }
        let x = if c < 0 { (-x.0, -x.1) } else { x };
        if cross(self.p, self.q) == 0 {
            return true;
        }
        cross(x, self.q) > 0
    }
}

/// Open sector `{u : s_k (n_k · u) > 0}` as a projective arc, if nonempty.
fn sector_arc(cons: &[(V, i128)]) -> Option<Arc> {
    let ok = |u: V, strict: bool| {
        cons.iter().all(|&(n, s)| {
            let v = s * dot(n, u);
            if strict {
                v > 0
            } else {
                v >= 0
            }
        })
    };
    let mut cands: Vec<V> = Vec::new();
    for &(n, _) in cons {
        for c in [(-n.1, n.0), (n.1, -n.0)] {
            let c = primitive(c);
            if c != (0, 0) && ok(c, false) && !cands.contains(&c) {
                cands.push(c);
            }
        }
    }
    if cands.is_empty() {
        return None;
    }
    // contains a line?
    if let Some(&c) = cands.iter().find(|&&c| cands.contains(&(-c.0, -c.1))) {
        let inner = (-c.1, c.0);
        if ok(inner, true) {
            return Some(Arc { p: c, q: (-c.0, -c.1) });
        }
        let c = (-c.0, -c.1);
        let inner = (-c.1, c.0);
        return ok(inner, true).then_some(Arc { p: c, q: (-c.0, -c.1) });
    }
    let p = *cands.iter().find(|&&p| cands.iter().all(|&c| cross(p, c) >= 0))?;
    let q = *cands.iter().find(|&&q| cands.iter().all(|&c| cross(c, q) >= 0))?;
    if cross(p, q) <= 0 {
        return None;
    }
    ok((p.0 + q.0, p.1 + q.1), true).then_some(Arc { p, q })
}

/// A Farey edge (a pair of primitive vectors with determinant ±1) joining two
/// disjoint open projective arcs.
fn farey_edge_between(i1: Arc, i2: Arc) -> Option<(V, V)> {
    let a = i2.q;
    let b = i1.q;
    let eg = a.0.extended_gcd(&a.1);
    // a0 * x + a1 * y = 1  →  M = [[a0, -y], [a1, x]] has det 1
    let (s, t) = (-eg.y, eg.x);
    debug_assert_eq!(a.0 * t - a.1 * s, eg.gcd);
    let mut x = t * b.0 - s * b.1;
    let mut y = -a.1 * b.0 + a.0 * b.1;
    if y == 0 {
        return None;
    }
    if y < 0 {
        x = -x;
        y = -y;
    }
    if x.rem_euclid(y) == 0 {
        return None;
    }
    let to_orig = |f: V| (a.0 * f.0 + s * f.1, a.1 * f.0 + t * f.1);
    let fl = x.div_euclid(y);
    let mut lo: V = (fl, 1);
    let mut hi: V = (fl + 1, 1);
    loop {
        let (pl, ph) = (to_orig(lo), to_orig(hi));
        if i1.contains(pl) && i2.contains(ph) {
            return Some((pl, ph));
        }
        if i1.contains(ph) && i2.contains(pl) {
            return Some((ph, pl));
        }
        let m = (lo.0 + hi.0, lo.1 + hi.1);
        let c = x * m.1 - m.0 * y;
        if c == 0 {
            return None;
        }
        if c < 0 {
            hi = m;
        } else {
            lo = m;
        }
    }
}

/// Exact decision: some unimodular image of `b` meets all four open quadrants.
pub fn exact_four_quadrants(b: &GaleDiagram) -> Option<(Unimodular, [usize; 4])> {
    let n = b.n();
    let rows: Vec<V> = b.rows.iter().map(|r| (r[0] as i128, r[1] as i128)).collect();
    for i1 in 0..n {
        for i2 in 0..n {
            for i3 in 0..n {
                for i4 in 0..n {
                    let idx = [i1, i2, i3, i4];
                    if (0..4).any(|x| (x + 1..4).any(|y| idx[x] == idx[y])) {
                        continue;
                    }
                    let c1 = [(rows[i1], 1), (rows[i2], -1), (rows[i3], -1), (rows[i4], 1)];
                    let c2 = [(rows[i1], 1), (rows[i2], 1), (rows[i3], -1), (rows[i4], -1)];
                    let (Some(a1), Some(a2)) = (sector_arc(&c1), sector_arc(&c2)) else {
                        continue;
                    };
                    if let Some((mut u1, mut u2)) = farey_edge_between(a1, a2) {
                        if dot(rows[i1], u1) < 0 {
                            u1 = (-u1.0, -u1.1);
                        }
                        if dot(rows[i1], u2) < 0 {
                            u2 = (-u2.0, -u2.1);
                        }
                        let u = [[u1.0 as i64, u2.0 as i64], [u1.1 as i64, u2.1 as i64]];
                        let t: Vec<[i64; 2]> = b.rows.iter().map(|r| apply_row(*r, &u)).collect();
                        let pick = quadrant_rows(&t).expect("Farey witness must meet all quadrants");
                        return Some((u, pick));
                    }
                }
            }
        }
    }
    None
}

/// Find a four-quadrant transform: bounded search first, exact test second.
pub fn four_quadrant_transform(b: &GaleDiagram, bound: i64) -> Option<(Unimodular, [usize; 4], bool)> {
    if let Some((u, pick)) = search_four_quadrants(b, bound) {
        return Some((u, pick, true));
    }
    exact_four_quadrants(b).map(|(u, pick)| (u, pick, false))
}

fn cone_in_first_quadrant(r2: [i64; 2], r4: [i64; 2]) -> bool {
    // extreme rays of {z : r2·z ≥ 0, r4·z ≥ 0}
    let mut e = [-r2[1], r2[0]];
    if r4[0] * e[0] + r4[1] * e[1] < 0 {
        e = [-e[0], -e[1]];
    }
    let mut f = [-r4[1], r4[0]];
    if r2[0] * f[0] + r2[1] * f[1] < 0 {
        f = [-f[0], -f[1]];
    }
    e[0] >= 0 && e[1] >= 0 && f[0] >= 0 && f[1] >= 0
}

fn arrange(b: &GaleDiagram, u: &Unimodular, pick: [usize; 4]) -> (GaleDiagram, Vec<usize>) {
    let mut order: Vec<usize> = pick.to_vec();
    order.extend((0..b.n()).filter(|i| !pick.contains(i)));
    let t = b.transformed(u);
    let rows = order.iter().map(|&i| t.rows[i]).collect();
    let perm = order.iter().map(|&i| b.permutation[i]).collect();
    (GaleDiagram::new(rows, perm), order)
}

/// Put a Gale diagram into the four-quadrant normal form.
pub fn gale_normalize(b: &GaleDiagram, bound: Option<i64>) -> Result<Normalized> {
    let bound = bound.unwrap_or_else(|| default_search_bound(b));
    let (mut u, pick, found_by_search) = four_quadrant_transform(b, bound).ok_or(Error::NormalizationImpossible)?;
    let (mut diagram, mut order) = arrange(b, &u, pick);
    let (r2, r4) = (diagram.rows[1], diagram.rows[3]);
    if r2[0] * r4[1] - r2[1] * r4[0] != 0 && !cone_in_first_quadrant(r2, r4) {
        // the cone lies in the third quadrant: pass to -B and swap Q1<->Q3, Q2<->Q4
        u = [[-u[0][0], -u[0][1]], [-u[1][0], -u[1][1]]];
        let pick = [pick[2], pick[3], pick[0], pick[1]];
        let (d, o) = arrange(b, &u, pick);
        diagram = d;
        order = o;
        debug_assert!(cone_in_first_quadrant(diagram.rows[1], diagram.rows[3]));
    }
    Ok(Normalized {
        diagram,
        transform: u,
        row_order: order,
        found_by_search,
    })
}

/// Check the normal-form invariants of a diagram.
pub fn is_normalized(b: &GaleDiagram) -> bool {
    if b.n() < 4 {
        return false;
    }
    if (0..4).any(|k| quadrant(b.rows[k]) != (k + 1) as u8) {
        return false;
    }
    let (r2, r4) = (b.rows[1], b.rows[3]);
    r2[0] * r4[1] - r2[1] * r4[0] == 0 || cone_in_first_quadrant(r2, r4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(rows: Vec<Vec<i64>>) -> Configuration {
        Configuration::new(rows).unwrap()
    }

    #[test]
    fn plane_example_diagram_is_already_normal() {
        let b = GaleDiagram::from_rows(vec![[1, 2], [-1, 1], [-1, -1], [1, -1], [0, -1]]);
        assert!(is_normalized(&b));
        let n = gale_normalize(&b, None).unwrap();
        assert_eq!(n.transform, IDENTITY);
        assert_eq!(n.diagram, b);
        assert_eq!(n.diagram.permutation(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn normalizes_rational_normal_curve_degree_four() {
        let b = GaleDiagram::from_rows(vec![[3, 2], [-4, -3], [0, 1], [1, 0]]);
        let n = gale_normalize(&b, None).unwrap();
        assert_eq!(n.diagram.rows(), &[[1, 1], [-1, 2], [-1, -2], [1, -1]]);
        assert_eq!(n.diagram.permutation(), &[0, 2, 1, 3]);
        assert_eq!(n.transform, [[1, -1], [-1, 2]]);
        assert!(is_normalized(&n.diagram));
    }

    #[test]
    fn two_opposite_quadrants_cannot_be_normalized() {
        // rows all on one line through the origin
        let b = GaleDiagram::from_rows(vec![[1, 1], [2, 2], [-1, -1], [-3, -3]]);
        assert!(matches!(
            gale_normalize(&b, Some(5)),
            Err(Error::NormalizationImpossible)
        ));
        assert!(exact_four_quadrants(&b).is_none());
    }

    #[test]
    fn kernel_basis_is_saturated_kernel() {
        for rows in [
            vec![vec![1, 1, 1, 1, 1], vec![0, 1, 0, 1, 0], vec![0, 0, 1, 1, -2]],
            vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]],
            vec![
                vec![1, 1, 1, 1, 1, 1],
                vec![0, 0, 0, 0, -2, 1],
                vec![1, 0, 0, 1, 0, 0],
                vec![1, 0, 2, 0, 1, 1],
            ],
        ] {
            let a = cfg(rows);
            let b = integer_kernel_basis(&a).unwrap();
            assert!(b.is_kernel_of(&a));
            assert!(b.is_saturated());
        }
    }

    #[test]
    fn exact_test_agrees_with_search_on_small_diagrams() {
        let cases = [
            vec![[1, 2], [-1, 1], [-1, -1], [1, -1], [0, -1]],
            vec![[3, 2], [-4, -3], [0, 1], [1, 0]],
            vec![[1, 0], [0, 1], [-1, -1], [2, 1]],
            vec![[1, 0], [-2, 1], [1, -2], [0, 1]],
        ];
        for rows in cases {
            let b = GaleDiagram::from_rows(rows);
            let s = search_four_quadrants(&b, 12).is_some();
            let e = exact_four_quadrants(&b).is_some();
            assert_eq!(s, e, "{:?}", b.rows());
        }
    }
}
