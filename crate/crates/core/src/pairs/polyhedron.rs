//! Exact integer feasibility for polyhedra in the plane.
//!
//! Constraints are tightened to integer data (`a` primitive, `b` integral),
//! then the recession cone `C = {z : a·z ≤ 0}` decides the method:
//! - `C = {0}`: the polygon is bounded; eliminate one coordinate and scan.
//! - `dim C = 1`: after a unimodular change putting the ray on `e_1`, every
//!   integer ordinate in the projection has an unbounded fiber.
//! - `dim C = 2`: any rational point plus the fundamental parallelogram of two
//!   independent integer rays lies inside and holds a lattice point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// `a · z ≤ c`, or `a · z < c` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    pub a: [i64; 2],
    pub c: BigRational,
    pub strict: bool,
}

impl HalfPlane {
    pub fn le(a: [i64; 2], c: i64) -> Self {
        HalfPlane {
            a,
            c: BigRational::from_integer(c.into()),
            strict: false,
        }
    }

    pub fn le_rat(a: [i64; 2], c: BigRational) -> Self {
        HalfPlane { a, c, strict: false }
    }

    pub fn lt(a: [i64; 2], c: i64) -> Self {
        HalfPlane {
            a,
            c: BigRational::from_integer(c.into()),
            strict: true,
        }
    }

    /// `a · z ≥ c`.
    pub fn ge(a: [i64; 2], c: i64) -> Self {
        HalfPlane::le([-a[0], -a[1]], -c)
    }

    pub fn contains(&self, z: [i64; 2]) -> bool {
        let v = BigRational::from_integer(BigInt::from(
            self.a[0] as i128 * z[0] as i128 + self.a[1] as i128 * z[1] as i128,
        ));
        if self.strict {
            v < self.c
        } else {
            v <= self.c
        }
    }
}

/// An intersection of half-planes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polyhedron2D {
    pub halfplanes: Vec<HalfPlane>,
}

impl Polyhedron2D {
    pub fn new(halfplanes: Vec<HalfPlane>) -> Self {
        Polyhedron2D { halfplanes }
    }

    pub fn push(&mut self, h: HalfPlane) {
        self.halfplanes.push(h);
    }

    pub fn with(&self, h: HalfPlane) -> Self {
        let mut p = self.clone();
        p.push(h);
        p
    }

    pub fn contains(&self, z: [i64; 2]) -> bool {
        self.halfplanes.iter().all(|h| h.contains(z))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegerPoints {
    Infeasible,
    /// A lattice point; `ray` is set when there are infinitely many, and then
    /// `point + t·ray` is feasible for every `t ≥ 0`.
    Feasible {
        point: [i64; 2],
        ray: Option<[i64; 2]>,
    },
}

impl IntegerPoints {
    pub fn is_feasible(&self) -> bool {
        matches!(self, IntegerPoints::Feasible { .. })
    }

    pub fn point(&self) -> Option<[i64; 2]> {
        match self {
            IntegerPoints::Feasible { point, .. } => Some(*point),
            IntegerPoints::Infeasible => None,
        }
    }
}

/// Integer row `a·z ≤ b`.
#[derive(Clone, Copy, Debug)]
struct Row {
    a: [i128; 2],
    b: i128,
}

impl Row {
    fn holds(&self, z: [i128; 2]) -> bool {
        self.a[0] * z[0] + self.a[1] * z[1] <= self.b
    }
}

fn floor_rat(q: &BigRational) -> i128 {
    q.floor().to_integer().to_i128().expect("bound fits in i128")
}

fn ceil_rat(q: &BigRational) -> i128 {
    q.ceil().to_integer().to_i128().expect("bound fits in i128")
}

/// `None` means the system is infeasible over the integers.
fn tighten(p: &Polyhedron2D) -> Option<Vec<Row>> {
    let mut rows = Vec::new();
    for h in &p.halfplanes {
        let (a0, a1) = (h.a[0] as i128, h.a[1] as i128);
        let g = a0.gcd(&a1);
        if g == 0 {
            let ok = if h.strict {
                h.c.is_positive()
            } else {
                !h.c.is_negative()
            };
            if !ok {
                return None;
            }
            continue;
        }
        let scaled = &h.c / BigRational::from_integer(BigInt::from(g));
        let b = if h.strict {
            ceil_rat(&scaled) - 1
        } else {
            floor_rat(&scaled)
        };
        rows.push(Row { a: [a0 / g, a1 / g], b });
    }
    Some(rows)
}

fn cross(a: [i128; 2], b: [i128; 2]) -> i128 {
    a[0] * b[1] - a[1] * b[0]
}

fn primitive(v: [i128; 2]) -> [i128; 2] {
    let g = v[0].gcd(&v[1]);
    if g == 0 {
        v
    } else {
        [v[0] / g, v[1] / g]
    }
}

/// Integer rays of the recession cone on constraint lines or along inward
/// normals; these include the extreme rays, and two independent ones when
/// the cone is a half-plane.
fn recession_rays(rows: &[Row]) -> Vec<[i128; 2]> {
    let mut out: Vec<[i128; 2]> = Vec::new();
    for r in rows {
        for c in [[-r.a[1], r.a[0]], [r.a[1], -r.a[0]], [-r.a[0], -r.a[1]]] {
            let c = primitive(c);
            if rows.iter().all(|s| s.a[0] * c[0] + s.a[1] * c[1] <= 0) && !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}

/// Unimodular `M` with first column `r`, as `(M, M⁻¹)`.
fn frame(r: [i128; 2]) -> ([[i128; 2]; 2], [[i128; 2]; 2]) {
    let eg = r[0].extended_gcd(&r[1]);
    debug_assert_eq!(eg.gcd, 1);
    let (x, y) = (eg.x, eg.y);
    // det [[r0, -y], [r1, x]] = r0 x + r1 y = 1
    let m = [[r[0], -y], [r[1], x]];
    let inv = [[x, y], [-r[1], r[0]]];
    (m, inv)
}

/// Rows in coordinates `z = M y`.
fn transform(rows: &[Row], m: [[i128; 2]; 2]) -> Vec<Row> {
    rows.iter()
        .map(|r| Row {
            a: [r.a[0] * m[0][0] + r.a[1] * m[1][0], r.a[0] * m[0][1] + r.a[1] * m[1][1]],
            b: r.b,
        })
        .collect()
}

/// Bounds on the second coordinate after eliminating the first, as rationals
/// (`None` = unbounded); `Err(())` when infeasible.
#[allow(clippy::type_complexity)]
fn project_second(rows: &[Row]) -> Result<(Option<BigRational>, Option<BigRational>), ()> {
    let mut derived: Vec<(i128, i128)> = Vec::new();
    for r in rows.iter().filter(|r| r.a[0] == 0) {
        derived.push((r.a[1], r.b));
    }
    for p in rows.iter().filter(|r| r.a[0] > 0) {
        for q in rows.iter().filter(|r| r.a[0] < 0) {
            let (lp, lq) = (-q.a[0], p.a[0]);
            derived.push((lp * p.a[1] + lq * q.a[1], lp * p.b + lq * q.b));
        }
    }
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for (a, b) in derived {
        if a == 0 {
            if b < 0 {
                return Err(());
            }
            continue;
        }
        let q = BigRational::new(BigInt::from(b), BigInt::from(a));
        if a > 0 {
            if hi.as_ref().is_none_or(|h| q < *h) {
                hi = Some(q);
            }
        } else if lo.as_ref().is_none_or(|l| q > *l) {
            lo = Some(q);
        }
    }
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l > h {
            return Err(());
        }
    }
    Ok((lo, hi))
}

/// Rational bounds of the first coordinate on the fiber `y_2 = t`.
fn fiber_first(rows: &[Row], t: &BigRational) -> (Option<BigRational>, Option<BigRational>) {
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for r in rows.iter().filter(|r| r.a[0] != 0) {
        let rhs = BigRational::from_integer(BigInt::from(r.b)) - t * BigRational::from_integer(BigInt::from(r.a[1]));
        let q = rhs / BigRational::from_integer(BigInt::from(r.a[0]));
        if r.a[0] > 0 {
            if hi.as_ref().is_none_or(|h| q < *h) {
                hi = Some(q);
            }
        } else if lo.as_ref().is_none_or(|l| q > *l) {
            lo = Some(q);
        }
    }
    (lo, hi)
}

fn clamp_zero(lo: &Option<BigRational>, hi: &Option<BigRational>) -> BigRational {
    let zero = BigRational::zero();
    match (lo, hi) {
        (Some(l), _) if *l > zero => l.clone(),
        (_, Some(h)) if *h < zero => h.clone(),
        _ => zero,
    }
}

fn clamp_zero_int(lo: i128, hi: i128) -> i128 {
    0.clamp(lo, hi)
}

fn to_point(z: [i128; 2]) -> [i64; 2] {
    [z[0] as i64, z[1] as i64]
}

/// Exact decision of `P ∩ Z² ≠ ∅`, with a point and, when the set is
/// infinite, a lattice ray.
pub fn integer_points_2d(p: &Polyhedron2D) -> IntegerPoints {
    let Some(rows) = tighten(p) else {
        return IntegerPoints::Infeasible;
    };
    if rows.is_empty() {
        return IntegerPoints::Feasible {
            point: [0, 0],
            ray: Some([1, 0]),
        };
    }
    let rays = recession_rays(&rows);
    let two_dim = rays
        .iter()
        .enumerate()
        .find_map(|(i, &r)| rays[i + 1..].iter().find(|&&s| cross(r, s) != 0).map(|&s| (r, s)));

    if let Some((r1, r2)) = two_dim {
        let ray = rays.iter().max().map(|&r| to_point(r));
        if rows.iter().all(|r| r.holds([0, 0])) {
            return IntegerPoints::Feasible { point: [0, 0], ray };
        }
        let Ok((lo, hi)) = project_second(&rows) else {
            return IntegerPoints::Infeasible;
        };
        let p2 = clamp_zero(&lo, &hi);
        let (flo, fhi) = fiber_first(&rows, &p2);
        let p1 = clamp_zero(&flo, &fhi);
        // bounding box of p + [0,1] r1 + [0,1] r2
        let xs = [0i128, r1[0], r2[0], r1[0] + r2[0]];
        let ys = [0i128, r1[1], r2[1], r1[1] + r2[1]];
        let x0 = floor_rat(&p1) + xs.iter().min().unwrap();
        let x1 = ceil_rat(&p1) + xs.iter().max().unwrap();
        let y0 = floor_rat(&p2) + ys.iter().min().unwrap();
        let y1 = ceil_rat(&p2) + ys.iter().max().unwrap();
        for x in x0..=x1 {
            for y in y0..=y1 {
                if rows.iter().all(|r| r.holds([x, y])) {
                    return IntegerPoints::Feasible {
                        point: to_point([x, y]),
                        ray,
                    };
                }
            }
        }
        unreachable!("a full-dimensional recession cone forces a lattice point");
    }

    let (m, ray) = match rays.first() {
        Some(&r) => (frame(r).0, Some(to_point(r))),
        None => ([[1, 0], [0, 1]], None),
    };
    let local = transform(&rows, m);
    let Ok((lo, hi)) = project_second(&local) else {
        return IntegerPoints::Infeasible;
    };
    let lo_i = lo.as_ref().map(ceil_rat);
    let hi_i = hi.as_ref().map(floor_rat);
    let back = |y: [i128; 2]| [m[0][0] * y[0] + m[0][1] * y[1], m[1][0] * y[0] + m[1][1] * y[1]];

    // Scan ordinates outward from the one nearest zero.
    let (Some(l), Some(h)) = (lo_i, hi_i) else {
        unreachable!("projection along a non-recession direction is bounded");
    };
    if l > h {
        return IntegerPoints::Infeasible;
    }
    let start = clamp_zero_int(l, h);
    let order = std::iter::once(start)
        .chain((1..).flat_map(|k| [start + k, start - k]))
        .take_while(|&t| (t - start).abs() <= (h - l));
    for t in order {
        if t < l || t > h {
            continue;
        }
        let tq = BigRational::from_integer(BigInt::from(t));
        let (flo, fhi) = fiber_first(&local, &tq);
        let a = flo.as_ref().map(ceil_rat);
        let b = fhi.as_ref().map(floor_rat);
        let y1 = match (a, b) {
            (Some(a), Some(b)) if a <= b => clamp_zero_int(a, b),
            (Some(_), Some(_)) => continue,
            (Some(a), None) => a.max(0),
            (None, Some(b)) => b.min(0),
            (None, None) => 0,
        };
        let z = back([y1, t]);
        debug_assert!(rows.iter().all(|r| r.holds(z)));
        return IntegerPoints::Feasible {
            point: to_point(z),
            ray,
        };
    }
    IntegerPoints::Infeasible
}

/// All lattice points in `[-r, r]²` (test oracle and small enumerations).
pub fn points_in_box(p: &Polyhedron2D, r: i64) -> Vec<[i64; 2]> {
    let mut out = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            if p.contains([x, y]) {
                out.push([x, y]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::affine::ratio;

    #[test]
    fn construction_pair_polytope_has_only_origin() {
        let p = Polyhedron2D::new(vec![
            HalfPlane::le([1, 2], 2),
            HalfPlane::le([-1, 1], 0),
            HalfPlane::le([1, -1], 0),
            HalfPlane::le([-1, -1], 0),
        ]);
        assert_eq!(
            integer_points_2d(&p),
            IntegerPoints::Feasible {
                point: [0, 0],
                ray: None
            }
        );
        assert_eq!(points_in_box(&p, 50), vec![[0, 0]]);
    }

    #[test]
    fn thin_strip_is_infeasible() {
        let p = Polyhedron2D::new(vec![
            HalfPlane::le_rat([-1, 0], ratio(-1, 5)),
            HalfPlane::le_rat([1, 0], ratio(9, 10)),
        ]);
        assert_eq!(integer_points_2d(&p), IntegerPoints::Infeasible);
    }

    #[test]
    fn half_plane_has_ray() {
        let p = Polyhedron2D::new(vec![HalfPlane::ge([1, 0], 0)]);
        match integer_points_2d(&p) {
            IntegerPoints::Feasible { point, ray: Some(r) } => {
                assert_eq!(point, [0, 0]);
                assert!(r[0] >= 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn strict_inequality_on_lattice() {
        // 0 < z1 < 1 has no integer solutions
        let p = Polyhedron2D::new(vec![HalfPlane::lt([-1, 0], 0), HalfPlane::lt([1, 0], 1)]);
        assert_eq!(integer_points_2d(&p), IntegerPoints::Infeasible);
    }

    #[test]
    fn narrow_cone_far_from_origin() {
        // 7 z1 - 5 z2 ≥ 1/2 and 7 z1 - 5 z2 ≤ 1/2 + 1/3 plus z2 ≥ 100: a thin
        // slanted strip, i.e. one-dimensional recession cone
        let p = Polyhedron2D::new(vec![
            HalfPlane::le_rat([-7, 5], ratio(-1, 2)),
            HalfPlane::le_rat([7, -5], ratio(5, 6)),
            HalfPlane::ge([0, 1], 100),
        ]);
        assert_eq!(integer_points_2d(&p), IntegerPoints::Infeasible);
        let q = Polyhedron2D::new(vec![
            HalfPlane::le([-7, 5], -1),
            HalfPlane::le([7, -5], 1),
            HalfPlane::ge([0, 1], 100),
        ]);
        let pt = integer_points_2d(&q).point().unwrap();
        assert!(q.contains(pt));
    }
}
