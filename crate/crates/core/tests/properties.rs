mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use gkz_core::exact::affine::ratio;
use gkz_core::exact::{integer_kernel_basis, AffineForm, ParamVector};
use gkz_core::hyper::*;
use gkz_core::pairs::{integer_points_2d, standard_pairs, HalfPlane, IntegerPoints, Polyhedron2D};
use gkz_core::toric::groebner::weight_gaps;
use gkz_core::toric::order::unit;
use gkz_core::toric::perturb::generic_refinement;
use gkz_core::toric::{groebner_fan_monomial_initial_ideals, toric_groebner_basis, MonomialIdeal, TermOrder};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| ratio(p, q))
}

fn affine_form() -> impl Strategy<Value = AffineForm> {
    (
        small_rational(),
        prop::collection::btree_map(1usize..=4, small_rational(), 0..3),
    )
        .prop_map(|(c, m)| AffineForm::from_parts(c, m))
}

fn halfplane() -> impl Strategy<Value = HalfPlane> {
    ([-6i64..=6, -6i64..=6], -30i64..=30, 1i64..=4, any::<bool>()).prop_map(|(a, c, q, strict)| {
        let mut h = HalfPlane::le_rat(a, ratio(c, q));
        h.strict = strict;
        h
    })
}

fn monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let gen = prop::collection::vec(0i64..=5, n)
                .prop_filter("degree 1..=5", |g| (1..=5).contains(&g.iter().sum::<i64>()));
            (Just(n), prop::collection::vec(gen, 1..=4))
        })
        .prop_map(|(n, gens)| MonomialIdeal::new(n, gens))
}

fn param_entry(label: usize) -> impl Strategy<Value = AffineForm> {
    prop_oneof![
        3 => (-4i64..=4).prop_map(AffineForm::from),
        1 => (-4i64..=4).prop_map(move |c| AffineForm::symbol(label).add_int(c)),
        1 => (-4i64..=4).prop_map(|c| AffineForm::from(ratio(2 * c + 1, 2))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn affine_forms_form_a_vector_space(f in affine_form(), g in affine_form(), h in affine_form(), k in small_rational()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&(&f + &g) * &k, &(&f * &k) + &(&g * &k));
        prop_assert_eq!(f.scale(&k), &f * &k);
    }

    #[test]
    fn substitution_is_additive(f in affine_form(), g in affine_form(), v in prop::collection::btree_map(1usize..=4, small_rational(), 0..5)) {
        prop_assert_eq!((&f + &g).substitute(&v), &f.substitute(&v) + &g.substitute(&v));
        let all: BTreeMap<usize, BigRational> = (1..=4).map(|i| (i, v.get(&i).cloned().unwrap_or_else(|| ratio(1, 7)))).collect();
        prop_assert!(f.substitute(&all).is_rational());
    }

    #[test]
    fn subspace_canonical_form_is_idempotent(
        p in prop::collection::vec(-5i64..=5, 3),
        dirs in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 0..3),
        s in prop::collection::vec(-4i64..=4, 3),
    ) {
        let a = AffineSubspace::from_ints(&p, &dirs);
        let again = AffineSubspace::new(a.point().to_vec(), a.directions().to_vec());
        prop_assert_eq!(&again, &a);
        // moving the base point inside the subspace changes nothing
        let params: Vec<BigRational> = s.iter().take(a.dim()).map(|&x| ratio(x, 1)).collect();
        let moved = AffineSubspace::new(a.at(&params), a.directions().to_vec());
        prop_assert_eq!(&moved, &a);
        prop_assert_eq!(a.parameters_of(&a.at(&params)), Some(params));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn integer_points_match_box_enumeration(extra in prop::collection::vec(halfplane(), 1..=4), r in 1i64..=10) {
        let mut p = Polyhedron2D::new(vec![
            HalfPlane::le([1, 0], r),
            HalfPlane::le([-1, 0], r),
            HalfPlane::le([0, 1], r),
            HalfPlane::le([0, -1], r),
        ]);
        for h in extra {
            p.push(h);
        }
        let brute = lattice_points_by_box(&p, r);
        match integer_points_2d(&p) {
            IntegerPoints::Infeasible => prop_assert!(brute.is_empty()),
            IntegerPoints::Feasible { point, ray } => {
                prop_assert!(brute.contains(&point));
                prop_assert_eq!(ray, None);
            }
        }
    }

    #[test]
    fn unbounded_regions_report_a_ray(h in halfplane()) {
        prop_assume!(h.a != [0, 0]);
        let p = Polyhedron2D::new(vec![h]);
        match integer_points_2d(&p) {
            IntegerPoints::Feasible { point, ray: Some(r) } => {
                for t in 0..5 {
                    prop_assert!(p.contains([point[0] + t * r[0], point[1] + t * r[1]]));
                }
            }
            other => prop_assert!(false, "half-plane gave {:?}", other),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn standard_pairs_match_the_definition(m in monomial_ideal()) {
        let top = (0..m.n()).map(|l| m.max_exponent(l)).max().unwrap_or(0);
        let got: BTreeSet<_> = standard_pairs(&m).into_iter().collect();
        prop_assert_eq!(got, standard_pairs_by_definition(&m, top));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn minimum_negative_support_matches_lattice_search(
        x in (param_entry(1), param_entry(2), param_entry(3), param_entry(4), param_entry(5))
    ) {
        let b = construct_exceptional(&a5(), None).unwrap().b().clone();
        let x = ParamVector(vec![x.0, x.1, x.2, x.3, x.4]);
        prop_assert_eq!(has_minimum_negative_support(&x, &b), mns_by_box(&x, &b, 12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn logfree_series_cancel_for_any_refinement(seed in any::<u64>(), which in 0usize..2) {
        let a = [a5(), a2()][which].clone();
        let c = construct_exceptional(&a, None).unwrap();
        let r = generic_refinement(c.b(), &unit(c.normal.n(), 2, -1), seed).unwrap();
        for f in logfree_exponents(&c.normal.a, c.b(), &c.beta, &r.ideal).unwrap() {
            let phi = canonical_series(&f.u, c.b(), 8).unwrap();
            let check = verify_series(&c.normal.a, c.b(), &phi, &r.basis);
            prop_assert!(check.passed(), "{} failed: {:?}", f.u, check.failures.first());
            prop_assert!(check.cancelled > 0);
        }
    }
}

/// Every generic weight lands in one of the enumerated cones, and 500
/// samples reach all of them.
#[test]
fn fan_matches_weight_sampling_on_the_quartic() {
    let b = integer_kernel_basis(&a2()).unwrap();
    let fan: BTreeSet<Vec<Vec<i64>>> = groebner_fan_monomial_initial_ideals(&b)
        .iter()
        .map(|c| c.ideal.generators().to_vec())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen = BTreeSet::new();
    let mut generic = 0;
    for _ in 0..500 {
        let w: Vec<i64> = (0..4).map(|_| rng.gen_range(-60..=60)).collect();
        let gb = toric_groebner_basis(&b, &TermOrder::new(vec![w.clone()]));
        if weight_gaps(&gb, &w).contains(&0) {
            continue;
        }
        generic += 1;
        let ideal = gb.leading_ideal().generators().to_vec();
        assert!(
            fan.contains(&ideal),
            "weight {w:?} gives an ideal outside the fan: {ideal:?}"
        );
        seen.insert(ideal);
    }
    assert!(generic > 400);
    assert_eq!(seen, fan);
}
