//! The finite witnesses behind the exceptional parameter `β = A·(v - e₃)`,
//! each recomputed and reported as a verdict.

use crate::error::Result;
use crate::exact::{Configuration, ParamVector};
use crate::pairs::lattice::is_standard_pair_lattice;
use crate::pairs::{standard_pairs, StandardPair};
use crate::toric::order::unit;
use crate::toric::perturb::{generic_refinement, Refinement};

use super::construct::{construct_exceptional, Construction};
use super::fake::kernel_basis_exponents;
use super::nsupp::{fmt_support, has_minimum_negative_support, negative_support, unique_mns_in_fiber};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub construction: Construction,
    pub refinement: Refinement,
    pub pair: StandardPair,
    pub checks: Vec<Check>,
}

impl WitnessReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `(∂₁^{v₁} ∂₂^{v₂} ∂₄^{v₄}, {3, 5, …, n})`.
pub fn construction_pair(c: &Construction) -> StandardPair {
    let n = c.normal.n();
    let mut eta = vec![0i64; n];
    for i in [0, 1, 3] {
        eta[i] = c.v[i].as_i64().expect("integral by construction");
    }
    StandardPair::new(eta, std::iter::once(2).chain(4..n).collect())
}

fn shifted_have_mns(c: &Construction) -> Check {
    let mut passed = true;
    let mut detail = Vec::new();
    let labels = ["v-e3", "v-e3-B1", "v-e3-B2", "v-e3-B1-B2"];
    for ((x, k), label) in c.shifted().iter().zip(labels) {
        let s = negative_support(x);
        let ok = s.len() == 1 && s.contains(k) && x[*k].as_i64() == Some(-1) && has_minimum_negative_support(x, c.b());
        passed &= ok;
        detail.push(format!("nsupp({label}) = {} for {x}: {}", fmt_support(&s), verdict(ok)));
    }
    Check {
        name: "shifted vectors have minimum negative support",
        passed,
        detail,
    }
}

fn v_unique(c: &Construction) -> Check {
    let ok = unique_mns_in_fiber(&c.v, c.b()) == Some(true);
    Check {
        name: "v is the only mns vector of v + BZ^2",
        passed: ok,
        detail: vec![format!("v = {}: {}", c.v, verdict(ok))],
    }
}

fn pair_is_standard(c: &Construction, r: &Refinement, pair: &StandardPair) -> Check {
    let by_definition = standard_pairs(&r.ideal).contains(pair);
    let by_lattice = is_standard_pair_lattice(c.b(), r.basis.order(), pair);
    Check {
        name: "construction pair is standard for in_(-e3,w)",
        passed: by_definition && by_lattice,
        detail: vec![
            format!("{pair} by definition: {}", verdict(by_definition)),
            format!("{pair} by lattice programs: {}", verdict(by_lattice)),
        ],
    }
}

/// The vectors `z` with, for their index `i`: `(Bz)_i > η_i`,
/// `(Bz)_j ≤ v_j` for `j ≠ 3, i` with `v_j ∈ N`, and `(Bz)_3 < 0`.
fn triple_works(c: &Construction, pair: &StandardPair) -> Check {
    let b = c.b();
    let mut passed = true;
    let mut detail = Vec::new();
    for (z, i) in [([1, 1], 0usize), ([0, 1], 1), ([1, 0], 3)] {
        let bz = b.apply(z);
        let p1 = bz[i] > pair.eta[i];
        let p2 = (0..b.n()).filter(|&j| j != 2 && j != i).all(|j| match c.v[j].as_i64() {
            Some(vj) if vj >= 0 => bz[j] <= vj,
            _ => true,
        });
        let p3 = bz[2] < 0;
        let ok = p1 && p2 && p3;
        passed &= ok;
        detail.push(format!(
            "z = ({},{}) for i = {}: Bz = {:?}: {}",
            z[0],
            z[1],
            i + 1,
            bz,
            verdict(ok)
        ));
    }
    Check {
        name: "the vectors (1,1), (0,1), (1,0) witness the pair",
        passed,
        detail,
    }
}

fn kernel_shifts(a: &Configuration, c: &Construction, r: &Refinement) -> Result<Check> {
    let ks = kernel_basis_exponents(a, c.b(), &c.degree_of_v(), &r.ideal)?;
    let mut passed = ks.iter().any(|f| f.u == c.v);
    let mut detail = vec![format!(
        "{} exponents with u3 = 0, v among them: {}",
        ks.len(),
        verdict(passed)
    )];
    for f in &ks {
        let shifted: ParamVector = f.u.minus_unit(2);
        let ok = has_minimum_negative_support(&shifted, c.b());
        passed &= ok;
        detail.push(format!("u = {} from {}: u-e3 mns {}", f.u, f.pair, verdict(ok)));
    }
    Ok(Check {
        name: "u - e3 has mns for every kernel exponent u",
        passed,
        detail,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn verify_construction_witnesses(a: &Configuration, bound: Option<i64>, seed: u64) -> Result<WitnessReport> {
    let c = construct_exceptional(a, bound)?;
    let n = c.normal.n();
    let r = generic_refinement(c.b(), &unit(n, 2, -1), seed)?;
    let pair = construction_pair(&c);
    let checks = vec![
        shifted_have_mns(&c),
        v_unique(&c),
        pair_is_standard(&c, &r, &pair),
        triple_works(&c, &pair),
        kernel_shifts(&c.normal.a, &c, &r)?,
    ];
    Ok(WitnessReport {
        construction: c,
        refinement: r,
        pair,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn plane_example_passes_for_several_seeds() {
        let a = Configuration::new(vec![vec![1, 1, 1, 1, 1], vec![0, 1, 0, 1, 0], vec![0, 0, 1, 1, -2]]).unwrap();
        for seed in 0..4 {
            let r = verify_construction_witnesses(&a, None, seed).unwrap();
            assert!(r.all_passed(), "seed {seed}: {:#?}", r.checks);
        }
    }

    #[test]
    fn quartic_curve_passes() {
        let a = Configuration::new(vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]]).unwrap();
        let r = verify_construction_witnesses(&a, None, 0).unwrap();
        assert!(r.all_passed(), "{:#?}", r.checks);
    }

    #[test]
    fn cm_input_is_rejected() {
        let a = Configuration::new(vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        assert!(matches!(
            verify_construction_witnesses(&a, None, 0),
            Err(Error::NormalizationImpossible)
        ));
    }
}
