//! Portable seeded randomness.
//!
//! Every random choice in the crate draws from a ChaCha8 stream seeded with
//! `rand_core`'s `seed_from_u64` expansion of a 64-bit seed. The stream is
//! identical on every platform. Independent workers launched from one base
//! seed use seeds `base + i` (wrapping), so any worker's run can be replayed
//! on its own from the seed it reports.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A seeded random stream.
#[derive(Clone, Debug)]
pub struct RngState {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RngState {
    pub fn new(seed: u64) -> Self {
        RngState {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream started from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        items.shuffle(&mut self.rng);
    }

    pub fn inner(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

/// Seed for worker `index` of a search started from `base`.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    base.wrapping_add(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn same_seed_same_stream() {
        let mut a = RngState::new(7);
        let mut b = RngState::new(7);
        let xs: Vec<u32> = (0..16).map(|_| a.inner().gen()).collect();
        let ys: Vec<u32> = (0..16).map(|_| b.inner().gen()).collect();
        assert_eq!(xs, ys);
        let mut c = RngState::new(8);
        let zs: Vec<u32> = (0..16).map(|_| c.inner().gen()).collect();
        assert_ne!(xs, zs);
    }

    #[test]
    fn shuffle_is_reproducible() {
        let mut v: Vec<u32> = (0..20).collect();
        let mut w = v.clone();
        RngState::new(1).shuffle(&mut v);
        RngState::new(1).shuffle(&mut w);
        assert_eq!(v, w);
        let mut sorted = v.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..20).collect::<Vec<_>>());
    }

    #[test]
    fn derived_seeds_wrap() {
        assert_eq!(derive_seed(u64::MAX, 1), 0);
        assert_eq!(derive_seed(10, 3), 13);
    }
}
