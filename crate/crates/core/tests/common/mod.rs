#![allow(dead_code)]

use num_traits::Zero;
use poncelet_core::classify::Center;
use poncelet_core::polycore::{rat, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Seed from `PONCELET_SEED`, or the fixed default.
pub fn seed() -> u64 {
    std::env::var("PONCELET_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed());
    r.set_stream(stream);
    r
}

/// Rational in `[−bound, bound]` with denominator at most `max_den`.
pub fn rand_rat(rng: &mut impl Rng, bound: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(-bound * den..=bound * den);
    rat(num, den)
}

/// Rational centre in `[−2, 2]²` off the unit circle and the focus.
pub fn rand_center_off_sigma(rng: &mut impl Rng) -> Center {
    loop {
        let e = Center::new(rand_rat(rng, 2, 12), rand_rat(rng, 2, 12));
        if !e.in_sigma() {
            return e;
        }
    }
}

/// As [`rand_center_off_sigma`], also off the line `x = 0`.
pub fn rand_generic_center(rng: &mut impl Rng) -> Center {
    loop {
        let e = rand_center_off_sigma(rng);
        if !e.x.is_zero() {
            return e;
        }
    }
}
