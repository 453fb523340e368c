use proptest::prelude::*;

use subexc_core::bott::{bott_chase, BottResult};
use subexc_core::geometry::{poincare_gp, IntPolynomial};
use subexc_core::liealg::{DynkinDiagram, Weight};
use subexc_core::subexc::{case_data, char_s, char_sf, recursion_check, CASES};

fn diagrams() -> Vec<DynkinDiagram> {
    vec![
        DynkinDiagram::a(5),
        DynkinDiagram::b(3),
        DynkinDiagram::c(3),
        DynkinDiagram::d(6),
        DynkinDiagram::e7(),
        DynkinDiagram::f4(),
        DynkinDiagram::g2(),
    ]
}

fn diagram_and_weight(range: i64) -> impl Strategy<Value = (DynkinDiagram, Weight)> {
    (0..diagrams().len()).prop_flat_map(move |i| {
        let d = diagrams().swap_remove(i);
        let n = d.rank();
        (Just(d), prop::collection::vec(-range..=range, n).prop_map(Weight::from))
    })
}

fn case_weight(range: i64) -> impl Strategy<Value = (u32, Weight, i64)> {
    prop::sample::select(CASES.to_vec()).prop_flat_map(move |m| {
        let n = case_data(m).unwrap().rank();
        (Just(m), prop::collection::vec(0..=range, n).prop_map(Weight::from), -30i64..=10)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutions((d, w) in diagram_and_weight(20), k in 0usize..8) {
        let node = 1 + k % d.rank();
        let once = d.simple_reflection(node, &w).unwrap();
        prop_assert_eq!(d.simple_reflection(node, &once).unwrap(), w);
    }

    #[test]
    fn dualizing_twice_is_identity((d, w) in diagram_and_weight(20)) {
        prop_assert_eq!(d.dualize(&d.dualize(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn dual_representations_have_equal_dimension((d, w) in diagram_and_weight(3)) {
        let w = Weight::from(w.coords().iter().map(|c| c.abs()).collect::<Vec<_>>());
        prop_assert_eq!(d.weyl_dimension(&w).unwrap(), d.weyl_dimension(&d.dualize(&w).unwrap()).unwrap());
    }

    #[test]
    fn chase_lands_in_dominant_chamber((d, w) in diagram_and_weight(8)) {
        match bott_chase(&d, &w).unwrap() {
            BottResult::Singular => {}
            BottResult::Cohomology { length, weight } => {
                prop_assert!(weight.is_dominant());
                prop_assert!(length <= d.positive_roots().len());
                if w.is_dominant() {
                    prop_assert_eq!((length, weight), (0, w));
                }
            }
        }
    }

    #[test]
    fn character_dual_is_an_involution((m, w, deg) in case_weight(3)) {
        let s = char_s(&case_data(m).unwrap());
        prop_assert_eq!(s.dual().dual().coeff(&w, deg).unwrap(), s.coeff(&w, deg).unwrap());
    }

    #[test]
    fn shift_moves_degrees((m, w, deg) in case_weight(3), k in -6i64..=6) {
        let s = char_s(&case_data(m).unwrap());
        prop_assert_eq!(s.shift(k).coeff(&w, deg + k).unwrap(), s.coeff(&w, deg).unwrap());
    }

    #[test]
    fn localization_is_four_periodic((m, w, deg) in case_weight(3)) {
        let sf = char_sf(&case_data(m).unwrap());
        prop_assert_eq!(sf.coeff(&w, deg).unwrap(), sf.coeff(&w, deg + 4).unwrap());
    }

    #[test]
    fn gaussian_binomials_are_palindromic(n in 1usize..10, k in 0usize..10) {
        let k = k % (n + 1);
        let g = IntPolynomial::gaussian_binomial(n, k, 1);
        prop_assert!(g.is_palindromic());
        let choose = (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64);
        prop_assert_eq!(g.eval(1), choose);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn l2_recursion_beyond_the_acceptance_range(p in 0i64..=7, q in 0i64..=7, r in 0i64..=7) {
        let rep = recursion_check(&case_data(1).unwrap(), p, q, r, -40, 8).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep);
    }
}

#[test]
fn poincare_polynomials_are_palindromic_with_unit_ends() {
    for m in CASES {
        let p = poincare_gp(m).unwrap();
        assert!(p.is_palindromic());
        assert_eq!(p.coeff(0), 1);
    }
}
