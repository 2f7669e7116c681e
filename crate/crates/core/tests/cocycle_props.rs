mod common;

use common::{element, letters, sl2};
use meyer_core::meyer::{cocycle_bound, cocycle_form};
use meyer_core::{phi1, sl2_word, tau, tau_cocycle_defect, BigRational, MeyerFunction, SymplecticElement};
use proptest::prelude::*;

fn genus_and_pair(max_g: usize, len: usize) -> impl Strategy<Value = (SymplecticElement, SymplecticElement)> {
    (1usize..=max_g).prop_flat_map(move |g| (element(g, len), element(g, len)))
}

fn genus_and_triple(max_g: usize, len: usize) -> impl Strategy<Value = [SymplecticElement; 3]> {
    (1usize..=max_g).prop_flat_map(move |g| (element(g, len), element(g, len), element(g, len)))
        .prop_map(|(a, b, c)| [a, b, c])
}

fn tau_q(a: &SymplecticElement, b: &SymplecticElement) -> BigRational {
    BigRational::from_integer(tau(a, b).unwrap().into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_closure((a, b) in genus_and_pair(3, 10)) {
        let ab = &a * &b;
        prop_assert!(SymplecticElement::new(ab.matrix().clone()).is_ok());
        prop_assert!((&a * &a.inverse()).is_identity());
        prop_assert!((&a.inverse() * &a).is_identity());
        prop_assert_eq!(ab.inverse(), &b.inverse() * &a.inverse());
    }

    #[test]
    fn sl2_round_trip(w in letters(20)) {
        let a = w.evaluate();
        prop_assert_eq!(sl2_word(&a).unwrap().evaluate(), a);
        prop_assert_eq!(w.normalized().evaluate(), w.evaluate());
        prop_assert!(w.concat(&w.inverse()).evaluate().is_identity());
    }

    #[test]
    fn cocycle_identity([a, b, c] in genus_and_triple(3, 6)) {
        prop_assert_eq!(tau_cocycle_defect(&a, &b, &c).unwrap(), 0);
    }

    #[test]
    fn bounded_by_genus_and_kernel((a, b) in genus_and_pair(3, 10)) {
        let t = tau(&a, &b).unwrap();
        let dim_v = cocycle_form(&a, &b).unwrap().basis.len();
        prop_assert!(t.unsigned_abs() as usize <= cocycle_bound(a.genus()).min(dim_v));
    }

    #[test]
    fn conjugation_invariance([a, b, c] in genus_and_triple(2, 6)) {
        let (ac, bc) = (a.conjugate_by(&c).unwrap(), b.conjugate_by(&c).unwrap());
        prop_assert_eq!(tau(&ac, &bc).unwrap(), tau(&a, &b).unwrap());
    }

    #[test]
    fn normalization_and_symmetry((a, b) in genus_and_pair(2, 8)) {
        let id = SymplecticElement::identity(a.genus());
        prop_assert_eq!(tau(&a, &id).unwrap(), 0);
        prop_assert_eq!(tau(&id, &a).unwrap(), 0);
        prop_assert_eq!(tau(&a, &a.inverse()).unwrap(), 0);
        prop_assert_eq!(tau(&a, &b).unwrap(), tau(&b, &a).unwrap());
    }

    #[test]
    fn additive_over_direct_sum((a, b) in genus_and_pair(2, 6), (c, d) in genus_and_pair(1, 6)) {
        let lhs = tau(&a.direct_sum(&c), &b.direct_sum(&d)).unwrap();
        prop_assert_eq!(lhs, tau(&a, &b).unwrap() + tau(&c, &d).unwrap());
    }

    #[test]
    fn phi1_class_function(a in sl2(16), b in sl2(16)) {
        let f = MeyerFunction::new().unwrap();
        prop_assert_eq!(f.eval(&a.conjugate_by(&b).unwrap()).unwrap(), f.eval(&a).unwrap());
    }

    #[test]
    fn phi1_inverse_antisymmetry(a in sl2(20)) {
        prop_assert_eq!(phi1(&a.inverse()).unwrap(), -phi1(&a).unwrap());
    }

    #[test]
    fn phi1_coboundary(a in sl2(16), b in sl2(16)) {
        let f = MeyerFunction::new().unwrap();
        let delta = f.eval(&a).unwrap() - f.eval(&(&a * &b)).unwrap() + f.eval(&b).unwrap();
        prop_assert_eq!(delta, tau_q(&a, &b));
    }

    #[test]
    fn phi1_word_independent(w in letters(24)) {
        let f = MeyerFunction::new().unwrap();
        let a = w.evaluate();
        let by_letters = f.eval_letters(&w).unwrap();
        prop_assert_eq!(&by_letters, &f.eval_word(&w.normalized()).unwrap());
        prop_assert_eq!(&by_letters, &f.eval_word(&sl2_word(&a).unwrap()).unwrap());
    }
}

#[test]
fn stability_under_stabilization() {
    let a = SymplecticElement::from_rows([[1, -1], [0, 1]]).unwrap();
    let id = SymplecticElement::identity(1);
    for n in 1..=8 {
        let an = a.pow(n);
        let t1 = tau(&a, &an).unwrap();
        let t2 = tau(&a.direct_sum(&id), &an.direct_sum(&id)).unwrap();
        assert_eq!((t1, t2), (-1, -1), "n = {n}");
    }
}
