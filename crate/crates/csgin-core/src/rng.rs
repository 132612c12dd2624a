//! Deterministic pseudo-randomness for generic coordinate changes and tests.
//!
//! All randomised constructions in this crate draw from [`SplitMix64`], a
//! counter-based generator: the state advances by a fixed odd constant and
//! each output is a finalising hash of the counter.  Two properties matter
//! here.  Identical seeds give identical streams on every platform, so
//! reports are reproducible bit for bit, and streams can be split by hashing
//! a label into the seed without consuming the parent stream.

/// SplitMix64 generator (Steele, Lea, Flood; the `java.util.SplittableRandom`
/// finaliser).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Derives an independent stream for `label` without advancing `self`.
    pub fn split(&self, label: u64) -> SplitMix64 {
        SplitMix64::new(mix(self.state ^ mix(label.wrapping_mul(GAMMA) ^ GAMMA)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix(self.state)
    }

    /// Uniform value in `0..bound` (`bound > 0`); the modulo bias is
    /// irrelevant for the bounds used here (far below `2^32`).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }

    /// Uniformly shuffled `0..len` index vector.
    pub fn permutation(&mut self, len: usize) -> alloc::vec::Vec<usize> {
        let mut perm: alloc::vec::Vec<usize> = (0..len).collect();
        for i in (1..len).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            perm.swap(i, j);
        }
        perm
    }
}
