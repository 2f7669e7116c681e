//! Seeded samplers for property checks and the `verify` subcommand.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::symplectic::{Letter, SL2Word, SymplecticElement};

pub const DEFAULT_SEED: u64 = 0x004d_6579_6572;
pub const SEED_VAR: &str = "MEYER_SEED";

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed from `MEYER_SEED`, falling back to [`DEFAULT_SEED`] when unset.
pub fn seed_from_env() -> Result<u64, String> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("{SEED_VAR} must be an unsigned integer, got `{s}`")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// Nonzero vector in `Z^{2g}` with entries in `[-bound, bound]`.
pub fn nonzero_vector(rng: &mut SampleRng, genus: usize, bound: i64) -> Vec<BigInt> {
    loop {
        let v: Vec<i64> = (0..2 * genus).map(|_| rng.gen_range(-bound..=bound)).collect();
        if v.iter().any(|&x| x != 0) {
            return v.into_iter().map(BigInt::from).collect();
        }
    }
}

/// Product of `len` transvections `T_v^{±1}` with `v` from [`nonzero_vector`].
pub fn transvection_product(rng: &mut SampleRng, genus: usize, len: usize, bound: i64) -> SymplecticElement {
    let mut acc = SymplecticElement::identity(genus);
    for _ in 0..len {
        let v = nonzero_vector(rng, genus, bound);
        let k = if rng.gen_bool(0.5) { 1 } else { -1 };
        let t = SymplecticElement::transvection_power(&v, k).expect("nonzero vector");
        acc = &acc * &t;
    }
    acc
}

/// Transvection product with a random length in `1..=max_len` and entries
/// in `[-3, 3]`.
pub fn small_element(rng: &mut SampleRng, genus: usize, max_len: usize) -> SymplecticElement {
    let len = rng.gen_range(1..=max_len);
    transvection_product(rng, genus, len, 3)
}

pub fn letter(rng: &mut SampleRng) -> Letter {
    match rng.gen_range(0..4) {
        0 => Letter::S,
        1 => Letter::SInv,
        2 => Letter::T,
        _ => Letter::TInv,
    }
}

pub fn sl2_letters(rng: &mut SampleRng, len: usize) -> SL2Word {
    SL2Word::from_letters((0..len).map(|_| letter(rng)))
}

/// Element of `SL(2; Z)` together with the word it was built from.
pub fn sl2_element(rng: &mut SampleRng, len: usize) -> (SL2Word, SymplecticElement) {
    let w = sl2_letters(rng, len);
    let a = w.evaluate();
    (w, a)
}
