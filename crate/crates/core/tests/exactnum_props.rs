mod common;

use common::{rat_matrix, symmetric};
use meyer_core::exactnum::{inverse, kernel_basis, rank, SymmetricForm};
use meyer_core::{RatForm, RatMatrix};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #[test]
    fn sylvester_law(g in (1usize..=5).prop_flat_map(|n| (symmetric(n), rat_matrix(n, n)))) {
        let (gram, p) = g;
        prop_assume!(inverse(&p).is_some());
        let f = RatForm::new(gram).unwrap();
        let h = f.congruent(&p).unwrap();
        prop_assert_eq!(h.signature(), f.signature());
        prop_assert_eq!(h.inertia(), f.inertia());
    }

    #[test]
    fn negation_and_direct_sum(a in (1usize..=4).prop_flat_map(symmetric), b in (1usize..=4).prop_flat_map(symmetric)) {
        let (fa, fb) = (RatForm::new(a).unwrap(), RatForm::new(b).unwrap());
        prop_assert_eq!(fa.negate().signature(), -fa.signature());
        prop_assert_eq!(fa.direct_sum(&fb).signature(), fa.signature() + fb.signature());
        let (p, n) = fa.inertia();
        prop_assert_eq!(p as i64 - n as i64, fa.signature());
        prop_assert!(p + n <= fa.dim());
    }

    #[test]
    fn rank_nullity(m in (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| rat_matrix(r, c))) {
        let ker = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn inverse_is_two_sided(m in (1usize..=4).prop_flat_map(|n| rat_matrix(n, n))) {
        if let Some(inv) = inverse(&m) {
            let id = RatMatrix::identity(m.rows());
            prop_assert_eq!(&m * &inv, id.clone());
            prop_assert_eq!(&inv * &m, id);
        } else {
            prop_assert!(m.det().unwrap().is_zero());
        }
    }
}

#[test]
fn signature_of_hyperbolic_plane() {
    let f: RatForm = SymmetricForm::new(RatMatrix::from_rows([[0, 1], [1, 0]].map(|r| r.map(|x| common::q(x, 1)).to_vec()))).unwrap();
    assert_eq!(f.signature(), 0);
    assert_eq!(f.inertia(), (1, 1));
}
