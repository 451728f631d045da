//! Seeded, counter-addressed randomness.
//!
//! Attempt `i` of a randomized search draws from ChaCha stream `i` under the
//! run's seed, so any attempt can be replayed alone and attempts can run in
//! any order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn attempt_rng(seed: u64, attempt: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt);
    rng
}
