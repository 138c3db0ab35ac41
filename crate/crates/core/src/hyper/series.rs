//! Truncated logarithm-free canonical series and their exact verification.
//!
//! For `v` with minimum negative support, the series is
//! `Σ_{z ∈ N_v} c(z) x^{v+Bz}`, where `N_v = {z : nsupp(v+Bz) = nsupp(v)}`
//! and, writing `v' = Bz`,
//! `c(z) = Π_{v'_i<0} Π_{j=1}^{-v'_i} (v_i - j + 1) / Π_{v'_i>0} Π_{j=1}^{v'_i} (v_i + j)`.
//! Coefficients stay factored into monic affine forms so equality is exact
//! and cheap, whatever the transcendentals.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{AffineForm, Configuration, GaleDiagram, ParamVector};
use crate::toric::binomial::fmt_monomial;
use crate::toric::GroebnerBasis;

use super::nsupp::{has_minimum_negative_support, negative_support, shift};

pub const DEFAULT_RADIUS: i64 = 8;

/// `scalar · Π f^{m_f}` with monic non-constant `f` and nonzero `m_f`, or zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredProduct {
    zero: bool,
    scalar: BigRational,
    factors: BTreeMap<AffineForm, i64>,
}

impl Default for FactoredProduct {
    fn default() -> Self {
        Self::one()
    }
}

/// A factor with a negative power evaluated to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisionByZero;

impl FactoredProduct {
    pub fn one() -> Self {
        FactoredProduct {
            zero: false,
            scalar: BigRational::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        FactoredProduct {
            zero: true,
            scalar: BigRational::zero(),
            factors: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn factors(&self) -> &BTreeMap<AffineForm, i64> {
        &self.factors
    }

    /// Multiply by `f^power`. A zero `f` with negative power is an error.
    pub fn mul_form(&mut self, f: &AffineForm, power: i64) -> std::result::Result<(), DivisionByZero> {
        if power == 0 || self.zero {
            return if power < 0 && f.is_zero() {
                Err(DivisionByZero)
            } else {
                Ok(())
            };
        }
        match f.leading_coeff() {
            None => {
                let c = f.constant_part();
                if c.is_zero() {
                    if power < 0 {
                        return Err(DivisionByZero);
                    }
                    *self = Self::zero();
                } else {
                    self.scalar *= pow(c, power);
                }
            }
            Some((_, lead)) => {
                let lead = lead.clone();
                self.scalar *= pow(&lead, power);
                let monic = f.scale(&lead.recip());
                let e = self.factors.entry(monic.clone()).or_insert(0);
                *e += power;
                if *e == 0 {
                    self.factors.remove(&monic);
                }
            }
        }
        Ok(())
    }

    pub fn mul(&self, other: &FactoredProduct) -> FactoredProduct {
        if self.zero || other.zero {
            return Self::zero();
        }
        let mut out = self.clone();
        out.scalar *= &other.scalar;
        for (f, m) in &other.factors {
            let e = out.factors.entry(f.clone()).or_insert(0);
            *e += m;
            if *e == 0 {
                out.factors.remove(f);
            }
        }
        out
    }

    /// Value at rational α's; `None` if a denominator vanishes or a symbol
    /// is missing.
    pub fn evaluate(&self, alpha: &BTreeMap<usize, BigRational>) -> Option<BigRational> {
        if self.zero {
            return Some(BigRational::zero());
        }
        let mut acc = self.scalar.clone();
        for (f, m) in &self.factors {
            let x = f.substitute(alpha);
            let val = x.as_rational()?.clone();
            if val.is_zero() {
                if *m < 0 {
                    return None;
                }
                return Some(BigRational::zero());
            }
            acc *= pow(&val, *m);
        }
        Some(acc)
    }
}

fn pow(x: &BigRational, m: i64) -> BigRational {
    let base = if m < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, m.unsigned_abs() as usize)
}

impl fmt::Display for FactoredProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            return f.write_str("0");
        }
        write!(f, "{}", crate::exact::affine::fmt_rational(&self.scalar))?;
        for (g, m) in &self.factors {
            if *m == 1 {
                write!(f, "·({g})")?;
            } else {
                write!(f, "·({g})^{m}")?;
            }
        }
        Ok(())
    }
}

/// `[a]_u = Π_i Π_{j=0}^{u_i-1} (a_i - j)`.
pub fn falling_factorial(a: &ParamVector, u: &[i64]) -> FactoredProduct {
    let mut p = FactoredProduct::one();
    for (ai, &ui) in a.iter().zip(u) {
        for j in 0..ui {
            p.mul_form(&ai.add_int(-j), 1).expect("positive power");
        }
    }
    p
}

/// The coefficient of `x^{v+Bz}` in the canonical series of `v`.
pub fn coefficient(v: &ParamVector, b: &GaleDiagram, z: [i64; 2]) -> Result<FactoredProduct> {
    let vp = b.apply(z);
    let mut c = FactoredProduct::one();
    for (vi, &di) in v.iter().zip(&vp) {
        if di < 0 {
            for j in 1..=-di {
                c.mul_form(&vi.add_int(1 - j), 1).expect("positive power");
            }
        } else {
            for j in 1..=di {
                c.mul_form(&vi.add_int(j), -1).map_err(|_| Error::ZeroDenominator(z))?;
            }
        }
    }
    Ok(c)
}

#[derive(Clone, Debug)]
pub struct SeriesTruncation {
    pub base: ParamVector,
    pub radius: i64,
    pub terms: BTreeMap<[i64; 2], FactoredProduct>,
}

impl SeriesTruncation {
    pub fn in_box(&self, z: [i64; 2]) -> bool {
        z[0].abs() <= self.radius && z[1].abs() <= self.radius
    }

    pub fn exponent(&self, b: &GaleDiagram, z: [i64; 2]) -> ParamVector {
        shift(&self.base, b, z)
    }

    /// Coefficients at rational α's, keyed by `z`.
    pub fn evaluate(&self, alpha: &BTreeMap<usize, BigRational>) -> Option<BTreeMap<[i64; 2], BigRational>> {
        self.terms
            .iter()
            .map(|(z, c)| c.evaluate(alpha).map(|x| (*z, x)))
            .collect()
    }
}

/// All terms with `‖z‖∞ ≤ radius` and `z ∈ N_v`.
pub fn canonical_series(v: &ParamVector, b: &GaleDiagram, radius: i64) -> Result<SeriesTruncation> {
    if !has_minimum_negative_support(v, b) {
        return Err(Error::Precondition(format!(
            "{v} does not have minimum negative support"
        )));
    }
    let s = negative_support(v);
    let mut terms = BTreeMap::new();
    for z0 in -radius..=radius {
        for z1 in -radius..=radius {
            let z = [z0, z1];
            if negative_support(&shift(v, b, z)) == s {
                terms.insert(z, coefficient(v, b, z)?);
            }
        }
    }
    Ok(SeriesTruncation {
        base: v.clone(),
        radius,
        terms,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cancellation {
    pub operator: String,
    pub z: [i64; 2],
    pub partner: [i64; 2],
}

#[derive(Clone, Debug, Default)]
pub struct SeriesCheck {
    pub homogeneous: bool,
    /// Interior output terms that cancelled exactly.
    pub cancelled: usize,
    /// Output terms whose partner lies outside the truncation.
    pub boundary: Vec<Cancellation>,
    pub failures: Vec<Cancellation>,
}

impl SeriesCheck {
    pub fn passed(&self) -> bool {
        self.homogeneous && self.failures.is_empty()
    }

    pub fn into_result(self, phi: &SeriesTruncation, b: &GaleDiagram) -> Result<SeriesCheck> {
        match self.failures.first() {
            None => Ok(self),
            Some(f) => Err(Error::CancellationFailure {
                operator: f.operator.clone(),
                exponent: format!("{}", phi.exponent(b, f.z)),
            }),
        }
    }
}

/// `a` must be in the row order of `b`.
///
/// Apply every Gröbner basis binomial `∂^u - ∂^w` to `φ`. The term `x^{v+Bz}`
/// hit by `∂^u` must be cancelled by `x^{v+Bz'}` hit by `∂^w`, where
/// `B(z - z') = u - w`.
pub fn verify_series(a: &Configuration, b: &GaleDiagram, phi: &SeriesTruncation, gb: &GroebnerBasis) -> SeriesCheck {
    let mut out = SeriesCheck {
        homogeneous: (0..2).all(|k| a.apply(&b.column(k)).iter().all(|x| *x == 0)),
        ..SeriesCheck::default()
    };
    for g in gb.elements() {
        let Some(zb) = b.coordinates_of(&g.vector()) else {
            out.homogeneous = false;
            continue;
        };
        for (u, w, zb, name) in [
            (
                &g.plus,
                &g.minus,
                zb,
                format!("{} - {}", fmt_monomial(&g.plus), fmt_monomial(&g.minus)),
            ),
            (
                &g.minus,
                &g.plus,
                [-zb[0], -zb[1]],
                format!("{} - {}", fmt_monomial(&g.minus), fmt_monomial(&g.plus)),
            ),
        ] {
            for (z, c) in &phi.terms {
                let partner = [z[0] - zb[0], z[1] - zb[1]];
                let record = Cancellation {
                    operator: name.clone(),
                    z: *z,
                    partner,
                };
                if !phi.in_box(partner) {
                    out.boundary.push(record);
                    continue;
                }
                let lhs = c.mul(&falling_factorial(&phi.exponent(b, *z), u));
                let rhs = match phi.terms.get(&partner) {
                    Some(c2) => c2.mul(&falling_factorial(&phi.exponent(b, partner), w)),
                    None => FactoredProduct::zero(),
                };
                if lhs == rhs {
                    out.cancelled += 1;
                } else {
                    out.failures.push(record);
                }
            }
        }
    }
    out
}

/// Largest absolute coefficient value among the terms, for display.
pub fn max_abs(values: &BTreeMap<[i64; 2], BigRational>) -> Option<BigRational> {
    values.values().map(|x| x.abs()).max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::affine::ratio;
    use crate::toric::order::TermOrder;
    use crate::toric::toric_groebner_basis;

    fn b2() -> GaleDiagram {
        GaleDiagram::from_rows(vec![[1, 1], [-1, 2], [-1, -2], [1, -1]])
    }

    fn a2() -> Configuration {
        // columns (1,4),(1,1),(1,3),(1,0): the normal order for these rows
        Configuration::new(vec![vec![1, 1, 1, 1], vec![4, 1, 3, 0]]).unwrap()
    }

    #[test]
    fn coefficient_example() {
        let v = ParamVector::from_ints(&[1, 1, -1, 0]);
        let c = coefficient(&v, &b2(), [1, 0]).unwrap();
        assert_eq!(c.evaluate(&BTreeMap::new()), Some(ratio(-1, 2)));
        assert_eq!(coefficient(&v, &b2(), [0, 0]).unwrap(), FactoredProduct::one());
    }

    #[test]
    fn series_of_an_exceptional_exponent_cancels() {
        let b = b2();
        let v = ParamVector::from_ints(&[1, 1, -1, 0]);
        let phi = canonical_series(&v, &b, 4).unwrap();
        assert!(phi
            .terms
            .keys()
            .all(|z| negative_support(&phi.exponent(&b, *z)) == [2].into()));
        let gb = toric_groebner_basis(&b, &TermOrder::graded_lex());
        let check = verify_series(&a2(), &b, &phi, &gb);
        assert!(check.passed(), "{:?}", check.failures);
        assert!(check.cancelled > 0);
    }

    #[test]
    fn symbolic_series_cancels_and_corruption_is_caught() {
        let b = b2();
        let v = ParamVector((11..15).map(AffineForm::symbol).collect());
        let mut phi = canonical_series(&v, &b, 2).unwrap();
        assert_eq!(phi.terms.len(), 25);
        let gb = toric_groebner_basis(&b, &TermOrder::graded_lex());
        assert!(verify_series(&a2(), &b, &phi, &gb).passed());
        phi.terms
            .get_mut(&[1, 1])
            .unwrap()
            .mul_form(&AffineForm::int(2), 1)
            .unwrap();
        let check = verify_series(&a2(), &b, &phi, &gb);
        assert!(!check.failures.is_empty());
        assert!(matches!(
            check.into_result(&phi, &b),
            Err(Error::CancellationFailure { .. })
        ));
    }

    #[test]
    fn factored_products_cancel() {
        let mut p = FactoredProduct::one();
        let f = AffineForm::symbol(5).scale(&ratio(2, 1)).add_int(3);
        p.mul_form(&f, 2).unwrap();
        p.mul_form(&f, -2).unwrap();
        assert_eq!(p, FactoredProduct::one());
        assert!(p.mul_form(&AffineForm::zero(), -1).is_err());
    }
}
