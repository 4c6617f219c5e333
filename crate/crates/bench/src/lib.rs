//! Shared inputs for the benchmarks.

use circlepath::{Multiset, MultisetRanker};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` admissible multisets for `n`, drawn uniformly from `M_n` by
/// rejection with a fixed seed.
pub fn sample_admissible(n: usize, count: usize, seed: u64) -> Vec<Multiset> {
    let ranker = MultisetRanker::new(n).expect("valid n");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m = ranker
            .unrank(rng.random_range(0..ranker.total()))
            .expect("rank in range");
        if m.is_admissible() {
            out.push(m);
        }
    }
    out
}
