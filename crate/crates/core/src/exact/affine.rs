//! Affine-linear forms over Q in formal transcendentals.
//!
//! A form is `c + Σ q_i α_i` where each `α_i` is a formal symbol labelled by
//! the (1-based) column index it was attached to. Distinct symbols are
//! linearly independent over Q, so a form is rational exactly when every
//! coefficient vanishes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AffineForm {
    constant: BigRational,
    coeffs: BTreeMap<usize, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

impl AffineForm {
    pub fn constant(c: BigRational) -> Self {
        AffineForm {
            constant: c,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The bare symbol `α_label`.
    pub fn symbol(label: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(label, BigRational::one());
        AffineForm {
            constant: BigRational::zero(),
            coeffs,
        }
    }

    pub fn from_parts(constant: BigRational, coeffs: BTreeMap<usize, BigRational>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        AffineForm { constant, coeffs }
    }

    pub fn constant_part(&self) -> &BigRational {
        &self.constant
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, BigRational> {
        &self.coeffs
    }

    pub fn coeff(&self, label: usize) -> BigRational {
        self.coeffs.get(&label).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.constant.is_integer()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.constant)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.constant.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.as_integer().and_then(|v| v.to_i64())
    }

    pub fn is_negative_integer(&self) -> bool {
        self.is_integer() && self.constant.is_negative()
    }

    pub fn is_nonnegative_integer(&self) -> bool {
        self.is_integer() && !self.constant.is_negative()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        AffineForm {
            constant: &self.constant * k,
            coeffs: self.coeffs.iter().map(|(i, c)| (*i, c * k)).collect(),
        }
    }

    pub fn add_int(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.constant += rat(k);
        out
    }

    /// Substitute rational values for the symbols; unassigned symbols stay.
    pub fn substitute(&self, values: &BTreeMap<usize, BigRational>) -> Self {
        let mut out = AffineForm::constant(self.constant.clone());
        for (i, c) in &self.coeffs {
            match values.get(i) {
                Some(v) => out.constant += c * v,
                None => {
                    out.coeffs.insert(*i, c.clone());
                }
            }
        }
        out
    }

    /// Leading symbolic coefficient (smallest label), if any.
    pub fn leading_coeff(&self) -> Option<(&usize, &BigRational)> {
        self.coeffs.iter().next()
    }
}

impl From<i64> for AffineForm {
    fn from(v: i64) -> Self {
        AffineForm::int(v)
    }
}

impl From<BigRational> for AffineForm {
    fn from(v: BigRational) -> Self {
        AffineForm::constant(v)
    }
}

fn merge(into: &mut BTreeMap<usize, BigRational>, other: &BTreeMap<usize, BigRational>, sign: bool) {
    for (i, c) in other {
        let e = into.entry(*i).or_insert_with(BigRational::zero);
        if sign {
            *e += c;
        } else {
            *e -= c;
        }
        if e.is_zero() {
            into.remove(i);
        }
    }
}

impl AddAssign<&AffineForm> for AffineForm {
    fn add_assign(&mut self, rhs: &AffineForm) {
        self.constant += &rhs.constant;
        merge(&mut self.coeffs, &rhs.coeffs, true);
    }
}

impl SubAssign<&AffineForm> for AffineForm {
    fn sub_assign(&mut self, rhs: &AffineForm) {
        self.constant -= &rhs.constant;
        merge(&mut self.coeffs, &rhs.coeffs, false);
    }
}

impl Add<&AffineForm> for &AffineForm {
    type Output = AffineForm;
    fn add(self, rhs: &AffineForm) -> AffineForm {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&AffineForm> for &AffineForm {
    type Output = AffineForm;
    fn sub(self, rhs: &AffineForm) -> AffineForm {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for AffineForm {
    type Output = AffineForm;
    fn add(mut self, rhs: AffineForm) -> AffineForm {
        self += &rhs;
        self
    }
}

impl Sub for AffineForm {
    type Output = AffineForm;
    fn sub(mut self, rhs: AffineForm) -> AffineForm {
        self -= &rhs;
        self
    }
}

impl Neg for &AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        self.scale(&-BigRational::one())
    }
}

impl Neg for AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        (&self).neg()
    }
}

impl Mul<&BigRational> for &AffineForm {
    type Output = AffineForm;
    fn mul(self, rhs: &BigRational) -> AffineForm {
        self.scale(rhs)
    }
}

pub fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.constant.is_zero() || self.coeffs.is_empty() {
            parts.push(fmt_rational(&self.constant));
        }
        for (i, c) in &self.coeffs {
            let mag = c.abs();
            let body = if mag.is_one() {
                format!("a{i}")
            } else {
                format!("{}*a{i}", fmt_rational(&mag))
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else if c.is_negative() {
                parts.push(format!("- {body}"));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// A vector of affine forms (exponents, parameters).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ParamVector(pub Vec<AffineForm>);

impl ParamVector {
    pub fn from_ints(v: &[i64]) -> Self {
        ParamVector(v.iter().map(|&x| AffineForm::int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, AffineForm> {
        self.0.iter()
    }

    pub fn add_int_vec(&self, v: &[i64]) -> Self {
        assert_eq!(v.len(), self.len());
        ParamVector(self.0.iter().zip(v).map(|(f, &k)| f.add_int(k)).collect())
    }

    pub fn sub_int_vec(&self, v: &[i64]) -> Self {
        assert_eq!(v.len(), self.len());
        ParamVector(self.0.iter().zip(v).map(|(f, &k)| f.add_int(-k)).collect())
    }

    /// `self - e_i` with `i` 0-based.
    pub fn minus_unit(&self, i: usize) -> Self {
        let mut out = self.clone();
        out.0[i] = out.0[i].add_int(-1);
        out
    }

    pub fn is_rational(&self) -> bool {
        self.0.iter().all(AffineForm::is_rational)
    }

    pub fn substitute(&self, values: &BTreeMap<usize, BigRational>) -> Self {
        ParamVector(self.0.iter().map(|f| f.substitute(values)).collect())
    }
}

impl std::ops::Index<usize> for ParamVector {
    type Output = AffineForm;
    fn index(&self, i: usize) -> &AffineForm {
        &self.0[i]
    }
}

impl fmt::Display for ParamVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `A · u` for an integer matrix and a vector of forms.
pub fn mat_apply(rows: &[Vec<i64>], u: &ParamVector) -> ParamVector {
    ParamVector(
        rows.iter()
            .map(|row| {
                let mut acc = AffineForm::zero();
                for (a, f) in row.iter().zip(u.iter()) {
                    if *a != 0 {
                        acc += &f.scale(&rat(*a));
                    }
                }
                acc
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrality_classification() {
        let a5 = AffineForm::symbol(5);
        assert!(!a5.is_rational());
        assert!(!a5.is_integer());
        assert!(AffineForm::int(-3).is_negative_integer());
        assert!(!AffineForm::constant(ratio(-1, 2)).is_integer());
        assert!((&a5 - &a5).is_zero());
        let f = a5.add_int(-1);
        assert_eq!(f.to_string(), "-1 + a5");
    }

    #[test]
    fn substitution_resolves_symbols() {
        let f = AffineForm::symbol(5).scale(&rat(2)).add_int(1);
        let mut vals = BTreeMap::new();
        vals.insert(5, ratio(1, 3));
        assert_eq!(f.substitute(&vals), AffineForm::constant(ratio(5, 3)));
    }
}
