use clustersieve::cspcheck::{verify, CSPInstance, CSPReport};
use clustersieve::polygons::{TypeA, TypeB, TypeD};
use clustersieve::qpoly::{
    binomial, divisors, eval_at_primitive_root, gauss_binomial, gauss_binomial_by_division, q_lucas, ComplexType,
    CoxeterType, RootOfUnitySpec,
};
use clustersieve::rootsys::{build_root_system, ColoredComplex};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gaussian_binomials_are_palindromic_and_positive(m in 0usize..24, k in 0usize..24) {
        prop_assume!(k <= m);
        let g = gauss_binomial(m, k, 1);
        prop_assert!(g.is_palindromic());
        prop_assert!(g.has_nonnegative_coeffs());
        prop_assert_eq!(g.eval_one(), binomial(m as i64, k as i64));
        prop_assert_eq!(g, gauss_binomial_by_division(m, k).unwrap());
    }

    #[test]
    fn q_lucas_matches_cyclotomic_reduction(m in 0usize..30, k in 0usize..30, d in 2usize..13) {
        prop_assume!(k <= m);
        let spec = RootOfUnitySpec::new(d).unwrap();
        // both paths either give the same integer or both report a non-rational value
        let direct = eval_at_primitive_root(&gauss_binomial(m, k, 1), spec).ok();
        prop_assert_eq!(q_lucas(m, k, spec).ok(), direct);
    }

    #[test]
    fn reports_survive_json(s in 1usize..3, n in 2usize..5, family in 0usize..3) {
        let t = match family {
            0 => ComplexType::a(s, n),
            1 => ComplexType::b(s, n),
            _ => ComplexType::d(s, n),
        }.unwrap();
        for k in 0..=t.max_k() {
            let r = verify(&CSPInstance::polygon(t, k).unwrap()).unwrap();
            prop_assert_eq!(CSPReport::from_json(&r.to_json()).unwrap(), r);
        }
    }

    #[test]
    fn fixed_sets_shrink_along_divisibility(s in 1usize..3, n in 2usize..5, family in 0usize..3) {
        // the element of order d is a power of the element of order d' when d | d'
        macro_rules! check {
            ($m:expr) => {{
                let m = $m;
                let order = m.group_order();
                for k in 0..=m.complex_type().max_k() {
                    for d in divisors(order) {
                        let small = m.fixed(k, d).unwrap();
                        for e in divisors(order).into_iter().filter(|e| e % d == 0) {
                            for f in m.fixed(k, e).unwrap() {
                                prop_assert!(small.contains(&f), "d={} e={} k={} {}", d, e, k, f);
                            }
                        }
                    }
                }
            }};
        }
        match family {
            0 => check!(TypeA::model(s, n).unwrap()),
            1 => check!(TypeB::model(s, n).unwrap()),
            _ => check!(TypeD::model(s, n).unwrap()),
        }
    }
}

#[test]
fn swapping_the_bipartition_keeps_orbit_structures() {
    for ty in [CoxeterType::E6, CoxeterType::F4, CoxeterType::H3] {
        let sys = build_root_system(ty).unwrap();
        let a = ColoredComplex::from_system(sys.clone(), 1).unwrap();
        let b = ColoredComplex::from_system(sys.with_swapped_bipartition(), 1).unwrap();
        for k in 1..=ty.rank() {
            assert_eq!(
                a.orbit_structure(k).unwrap(),
                b.orbit_structure(k).unwrap(),
                "{ty} k={k}"
            );
        }
    }
}
