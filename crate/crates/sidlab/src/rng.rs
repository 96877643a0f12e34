//! Seed derivation and the counter-based noise stream.
//!
//! Process noise is keyed on `(seed, step index)` rather than drawn from a
//! stateful generator, so replaying an action sequence under a different
//! parameter vector sees the identical noise realization. Everything else
//! (parameter sampling, optimizer populations, evaluation episodes) derives
//! child seeds from a base seed plus a role constant and an index, which keeps
//! parallel evaluation order-independent.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream tags, mixed into derived seeds so distinct uses never collide.
pub mod stream {
    pub const NOISE: u64 = 0x4e4f_4953_4500_0001;
    pub const INIT_STATE: u64 = 0x494e_4954_0000_0002;
    pub const THETA_SAMPLE: u64 = 0x5448_4554_4100_0003;
    pub const ROLLOUT: u64 = 0x524f_4c4c_0000_0004;
    pub const CEM_ITER: u64 = 0x4345_4d49_0000_0005;
    pub const EXPLORE: u64 = 0x4558_504c_0000_0006;
    pub const SYSID: u64 = 0x5359_5349_4400_0007;
    pub const TASK: u64 = 0x5441_534b_0000_0008;
    pub const REAL_EPISODE: u64 = 0x5245_414c_0000_0009;
    pub const EVAL: u64 = 0x4556_414c_0000_000a;
    pub const ORACLE: u64 = 0x4f52_4143_0000_000b;
    pub const DR: u64 = 0x4452_5441_534b_000c;
    pub const RANDOM_POLICY: u64 = 0x524e_4450_4f4c_000d;
    pub const SWEEP: u64 = 0x5357_4545_5000_000e;
}

/// splitmix64 finalizer; good avalanche, cheap, stable across platforms.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive a child seed from a base seed and one index.
pub fn derive(seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ index.wrapping_mul(0xd6e8_feb8_6659_fd93))
}

/// Derive a child seed from a base seed, a stream tag, and an index.
pub fn derive2(seed: u64, tag: u64, index: u64) -> u64 {
    derive(derive(seed, tag), index)
}

/// Deterministic RNG for a derived stream.
pub fn rng_for(seed: u64, tag: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive2(seed, tag, index))
}

/// The noise draw for step `h` of the episode keyed by `seed`: `dim` i.i.d.
/// standard normal variates, scaled by the caller. Depends only on
/// `(seed, h)`, never on the trajectory so far.
pub fn noise_draw(seed: u64, h: usize, dim: usize) -> Vec<f64> {
    use rand::Rng;
    let mut rng = rng_for(seed, stream::NOISE, h as u64);
    (0..dim)
        .map(|_| rng.sample(rand_distr::StandardNormal))
        .collect()
}
