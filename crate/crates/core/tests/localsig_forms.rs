use meyer_core::localsig::{
    globalized_families, holomorphic_from_topology, lookup_germ, solve_unknown_germ, surface_topology,
    LinearForm,
};
use meyer_core::BigInt;
use proptest::prelude::*;

#[test]
fn family_forms_fit_from_two_points() {
    for fam in globalized_families() {
        let (a0, a1) = (BigInt::from(3), BigInt::from(11));
        let (c0, s0, n0) = fam.topology(&a0).unwrap();
        let (c1, s1, n1) = fam.topology(&a1).unwrap();
        assert_eq!(LinearForm::through(&a0, &c0, &a1, &c1).unwrap(), fam.expected_chi_top, "{}", fam.target);
        assert_eq!(LinearForm::through(&a0, &s0, &a1, &s1).unwrap(), fam.expected_sign, "{}", fam.target);
        assert_eq!(LinearForm::through(&a0, &n0, &a1, &n1).unwrap(), fam.expected_fiber_count, "{}", fam.target);
    }
}

proptest! {
    #[test]
    fn solved_sigma_is_independent_of_alpha(alpha in 2i64..400) {
        let alpha = BigInt::from(alpha);
        for fam in globalized_families() {
            let solved = solve_unknown_germ(&fam.ledger_at(&alpha).unwrap()).unwrap();
            prop_assert_eq!(solved.sigma, lookup_germ(fam.target).unwrap().sigma);
        }
    }

    #[test]
    fn topology_round_trip(chi_o in -1000i64..1000, k2 in -1000i64..1000) {
        let (chi_o, k2) = (BigInt::from(chi_o), BigInt::from(k2));
        let (chi, sign) = surface_topology(&chi_o, &k2);
        prop_assert_eq!(holomorphic_from_topology(&chi, &sign).unwrap(), (chi_o, k2));
    }
}
