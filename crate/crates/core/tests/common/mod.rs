#![allow(dead_code)]

pub mod artin;

use rand::prelude::*;
use tangle3::{BraidWord, Letter};

/// A word of uniformly random length `0..=max_len` over `s_lo..=s_hi` with exponents `±1`.
pub fn random_word(rng: &mut StdRng, lo: u8, hi: u8, max_len: usize) -> BraidWord {
    let n = rng.gen_range(0..=max_len);
    BraidWord::from_letters((0..n).map(|_| {
        let exp = if rng.gen() { 1 } else { -1 };
        Letter::new(rng.gen_range(lo..=hi), exp).unwrap()
    }))
}

pub fn corpus(seed: u64, count: usize, lo: u8, hi: u8, max_len: usize) -> Vec<BraidWord> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random_word(&mut rng, lo, hi, max_len)).collect()
}

pub fn word(s: &str) -> BraidWord {
    s.parse().unwrap()
}
