#![allow(dead_code)]

use meyer_core::symplectic::Letter;
use meyer_core::{BigInt, BigRational, RatMatrix, SL2Word, SymplecticElement};
use proptest::prelude::*;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Products of up to `max_len` transvections `T_v^{±1}` with entries of
/// `v` in `[-3, 3]`.
pub fn element(genus: usize, max_len: usize) -> impl Strategy<Value = SymplecticElement> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, 2 * genus), any::<bool>()), 0..=max_len).prop_map(
        move |factors| {
            let mut acc = SymplecticElement::identity(genus);
            for (v, inv) in factors {
                if v.iter().all(|&x| x == 0) {
                    continue;
                }
                let v: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
                let t = SymplecticElement::transvection_power(&v, if inv { -1 } else { 1 }).unwrap();
                acc = &acc * &t;
            }
            acc
        },
    )
}

pub fn letters(max_len: usize) -> impl Strategy<Value = SL2Word> {
    prop::collection::vec(prop_oneof![Just(Letter::S), Just(Letter::SInv), Just(Letter::T), Just(Letter::TInv)], 0..=max_len)
        .prop_map(SL2Word::from_letters)
}

pub fn sl2(max_len: usize) -> impl Strategy<Value = SymplecticElement> {
    letters(max_len).prop_map(|w| w.evaluate())
}

pub fn rat_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec((-6i64..=6, 1i64..=3), rows * cols).prop_map(move |e| {
        RatMatrix::from_vec(rows, cols, e.into_iter().map(|(n, d)| q(n, d)).collect()).unwrap()
    })
}

pub fn symmetric(n: usize) -> impl Strategy<Value = RatMatrix> {
    rat_matrix(n, n).prop_map(|m| &m + &m.transpose())
}
