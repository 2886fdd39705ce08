//! Seeded randomness.
//!
//! Every random choice in the crate draws from xoshiro256++ seeded through
//! SplitMix64 (`Xoshiro256PlusPlus::seed_from_u64`). Both algorithms are
//! fixed and platform independent, so a seed reproduces the same digraphs,
//! colorings and reports everywhere. Helpers below only draw `u64`/`f64`
//! values, never `usize`, to keep streams identical on 32- and 64-bit hosts.

use rand::{Rng as _, RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

pub type Rng = Xoshiro256PlusPlus;

pub fn seeded(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}

/// An independent stream for sub-task `stream` of a run seeded with `seed`
/// (experiment trials, retries of a Las Vegas loop).
pub fn derived(seed: u64, stream: u64) -> Rng {
    Rng::seed_from_u64(mix(seed ^ mix(stream.wrapping_add(0x9E37_79B9_7F4A_7C15))))
}

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A fair coin from the top bit of one draw.
pub fn coin(rng: &mut Rng) -> bool {
    rng.next_u64() >> 63 == 1
}

/// Uniform integer in `0..bound`.
pub fn below(rng: &mut Rng, bound: usize) -> usize {
    assert!(bound > 0, "empty range");
    rng.gen_range(0..bound as u64) as usize
}

/// Uniform float in `[0, 1)`.
pub fn unit(rng: &mut Rng) -> f64 {
    rng.gen::<f64>()
}

/// Uniform element of a nonempty slice.
pub fn choose<'a, T>(rng: &mut Rng, items: &'a [T]) -> &'a T {
    &items[below(rng, items.len())]
}

/// Fisher-Yates shuffle driven by `below`.
pub fn shuffle<T>(rng: &mut Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = below(rng, i + 1);
        items.swap(i, j);
    }
}

/// A uniformly random `m`-subset of `0..n`, sorted.
pub fn sample_subset(rng: &mut Rng, n: usize, m: usize) -> Vec<usize> {
    assert!(m <= n);
    let mut all: Vec<usize> = (0..n).collect();
    for i in 0..m {
        let j = i + below(rng, n - i);
        all.swap(i, j);
    }
    let mut chosen = all[..m].to_vec();
    chosen.sort_unstable();
    chosen
}
