//! Buchberger's algorithm specialized to binomial ideals, and the toric ideal
//! `I_A` obtained by saturating a lattice basis ideal.

use std::cmp::Ordering;

use super::binomial::{divides, lcm, Binomial, Exponent, MonomialIdeal};
use super::order::{dot, TermOrder};
use crate::error::{Error, Result};
use crate::exact::{Configuration, GaleDiagram};

/// A reduced Gröbner basis; each element's `plus` is its leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    elements: Vec<Binomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Normal form of a monomial.
    pub fn reduce(&self, m: &[i64]) -> Exponent {
        normal_form(&self.elements, m)
    }

    /// Whether `∂^a - ∂^b` lies in the ideal.
    pub fn contains_binomial(&self, a: &[i64], b: &[i64]) -> bool {
        self.reduce(a) == self.reduce(b)
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        let n = self.elements.first().map_or(0, Binomial::n);
        MonomialIdeal::new(n, self.elements.iter().map(|g| g.plus.clone()))
    }
}

fn normal_form(basis: &[Binomial], m: &[i64]) -> Exponent {
    let mut cur = m.to_vec();
    'outer: loop {
        for g in basis {
            if divides(&g.plus, &cur) {
                for ((x, m), p) in cur.iter_mut().zip(&g.minus).zip(&g.plus) {
                    *x += m - p;
                }
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Orient `∂^a - ∂^b` so the larger term leads; `None` if `a = b`.
fn oriented(order: &TermOrder, a: Exponent, b: Exponent) -> Option<Binomial> {
    match order.cmp(&a, &b) {
        Ordering::Greater => Some(Binomial::new(a, b)),
        Ordering::Less => Some(Binomial::new(b, a)),
        Ordering::Equal => None,
    }
}

fn coprime(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(gens: &[Binomial], order: &TermOrder) -> GroebnerBasis {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        let a = normal_form(&basis, &g.plus);
        let b = normal_form(&basis, &g.minus);
        if let Some(h) = oriented(order, a, b) {
            basis.push(h);
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (f, g) = (&basis[i], &basis[j]);
        if coprime(&f.plus, &g.plus) {
            continue;
        }
        let m = lcm(&f.plus, &g.plus);
        let s1: Exponent = (0..m.len()).map(|k| m[k] - f.plus[k] + f.minus[k]).collect();
        let s2: Exponent = (0..m.len()).map(|k| m[k] - g.plus[k] + g.minus[k]).collect();
        let a = normal_form(&basis, &s1);
        let b = normal_form(&basis, &s2);
        if let Some(h) = oriented(order, a, b) {
            let k = basis.len();
            basis.push(h);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    reduce_basis(basis, order)
}

fn reduce_basis(mut basis: Vec<Binomial>, order: &TermOrder) -> GroebnerBasis {
    basis.sort_by(|a, b| order.cmp(&a.plus, &b.plus).then_with(|| a.minus.cmp(&b.minus)));
    // minimize: drop elements whose leading term is a multiple of another's
    let mut minimal: Vec<Binomial> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| divides(&h.plus, &g.plus)) {
            minimal.push(g);
        }
    }
    let reduced: Vec<Binomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Binomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let g = &minimal[i];
            Binomial::new(g.plus.clone(), normal_form(&others, &g.minus))
        })
        .collect();
    let mut elements = reduced;
    elements.sort();
    GroebnerBasis {
        order: order.clone(),
        elements,
    }
}

/// Binomials of a lattice basis: `∂^{B_k+} - ∂^{B_k-}` for each column.
pub fn lattice_basis_binomials(b: &GaleDiagram) -> Vec<Binomial> {
    (0..2).map(|k| Binomial::from_vector(&b.column(k))).collect()
}

/// Generators of the lattice ideal `I_L` for `L` the column span of `B`,
/// obtained by saturating the lattice basis ideal by each variable in turn.
pub fn lattice_ideal_generators(b: &GaleDiagram) -> Vec<Binomial> {
    let n = b.n();
    let mut gens = lattice_basis_binomials(b);
    for i in 0..n {
        let gb = groebner_basis(&gens, &TermOrder::revlex_cheapest(n, i));
        gens = gb
            .elements
            .into_iter()
            .map(|mut g| {
                let k = g.plus[i].min(g.minus[i]);
                g.plus[i] -= k;
                g.minus[i] -= k;
                g
            })
            .collect();
    }
    gens.sort();
    gens.dedup();
    gens
}

/// Reduced Gröbner basis of `I_A` (columns in the diagram's order).
pub fn toric_groebner_basis(b: &GaleDiagram, order: &TermOrder) -> GroebnerBasis {
    groebner_basis(&lattice_ideal_generators(b), order)
}

/// Initial form of one basis element with respect to a weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InitialForm {
    Monomial(Exponent),
    Binomial(Binomial),
}

/// `in_w` of the ideal, from a Gröbner basis whose order refines `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialIdeal {
    pub forms: Vec<InitialForm>,
    pub is_monomial: bool,
}

impl InitialIdeal {
    pub fn monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.is_monomial {
            return None;
        }
        let gens: Vec<Exponent> = self
            .forms
            .iter()
            .filter_map(|f| match f {
                InitialForm::Monomial(m) => Some(m.clone()),
                InitialForm::Binomial(_) => None,
            })
            .collect();
        let n = gens.first().map_or(0, Vec::len);
        Some(MonomialIdeal::new(n, gens))
    }
}

/// Initial forms with respect to the weight chain `ws` (compared in order).
pub fn initial_ideal_chain(gb: &GroebnerBasis, ws: &[Vec<i64>]) -> Result<InitialIdeal> {
    let chain = TermOrder::new(ws.to_vec());
    let mut forms = Vec::with_capacity(gb.len());
    for g in &gb.elements {
        match chain.cmp_chain(&g.plus, &g.minus) {
            Ordering::Greater => forms.push(InitialForm::Monomial(g.plus.clone())),
            Ordering::Equal => forms.push(InitialForm::Binomial(g.clone())),
            Ordering::Less => return Err(Error::NotAGBForThisWeight),
        }
    }
    let is_monomial = forms.iter().all(|f| matches!(f, InitialForm::Monomial(_)));
    Ok(InitialIdeal { forms, is_monomial })
}

pub fn initial_ideal(gb: &GroebnerBasis, w: &[i64]) -> Result<InitialIdeal> {
    initial_ideal_chain(gb, &[w.to_vec()])
}

/// Post-hoc Buchberger criterion: every S-pair reduces to zero.
pub fn satisfies_buchberger(gb: &GroebnerBasis) -> bool {
    let e = &gb.elements;
    for j in 0..e.len() {
        for i in 0..j {
            let m = lcm(&e[i].plus, &e[j].plus);
            let s1: Exponent = (0..m.len()).map(|k| m[k] - e[i].plus[k] + e[i].minus[k]).collect();
            let s2: Exponent = (0..m.len()).map(|k| m[k] - e[j].plus[k] + e[j].minus[k]).collect();
            if normal_form(e, &s1) != normal_form(e, &s2) {
                return false;
            }
        }
    }
    true
}

/// Weight value `w · (plus - minus)` for each element.
pub fn weight_gaps(gb: &GroebnerBasis, w: &[i64]) -> Vec<i128> {
    gb.elements.iter().map(|g| dot(w, &g.plus) - dot(w, &g.minus)).collect()
}

/// Every element is a valid binomial of `I_A` for the given column order.
pub fn is_toric_for(gb: &GroebnerBasis, a: &Configuration) -> bool {
    gb.elements.iter().all(|g| g.is_valid_for(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::integer_kernel_basis;

    fn cfg(rows: Vec<Vec<i64>>) -> Configuration {
        Configuration::new(rows).unwrap()
    }

    #[test]
    fn twisted_quartic_graded_basis() {
        let a = cfg(vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]]);
        let b = integer_kernel_basis(&a).unwrap();
        let gb = toric_groebner_basis(&b, &TermOrder::graded_lex());
        assert!(satisfies_buchberger(&gb));
        assert!(is_toric_for(&gb, &a));
        // I_A of the quartic curve {1, s t^3... } needs four quadrics/cubics:
        // b c - a d, a c^2 - b^2 d, b^3 - a^2 c, c^3 - b d^2
        assert_eq!(gb.len(), 4);
        for (p, m) in [
            ([0, 1, 1, 0], [1, 0, 0, 1]),
            ([1, 0, 2, 0], [0, 2, 0, 1]),
            ([0, 3, 0, 0], [2, 0, 1, 0]),
            ([0, 0, 3, 0], [0, 1, 0, 2]),
        ] {
            assert!(gb.contains_binomial(&p, &m));
        }
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let g = Binomial::new(vec![2, 0], vec![0, 2]);
        let gb = groebner_basis(std::slice::from_ref(&g), &TermOrder::graded_lex());
        assert_eq!(gb.elements(), &[g]);
    }

    #[test]
    fn initial_ideal_by_zero_weight_is_not_monomial() {
        let a = cfg(vec![vec![1, 1, 1, 1, 1], vec![0, 1, 0, 1, 0], vec![0, 0, 1, 1, -2]]);
        let b = integer_kernel_basis(&a).unwrap();
        let gb = toric_groebner_basis(&b, &TermOrder::graded_lex());
        let init = initial_ideal(&gb, &[0; 5]).unwrap();
        assert!(!init.is_monomial);
        assert!(init.forms.iter().all(|f| matches!(f, InitialForm::Binomial(_))));
    }

    #[test]
    fn mismatched_weight_is_detected() {
        let a = cfg(vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]]);
        let b = integer_kernel_basis(&a).unwrap();
        let gb = toric_groebner_basis(&b, &TermOrder::new(vec![vec![0, 0, 0, 1]]));
        assert!(matches!(
            initial_ideal(&gb, &[0, 0, 0, -1]),
            Err(Error::NotAGBForThisWeight)
        ));
    }
}
