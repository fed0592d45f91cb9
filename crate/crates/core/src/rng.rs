//! Deterministic SplitMix64 streams.
//!
//! Draw `i` (0-based) of the stream with seed `s` is
//! `mix(s + (i + 1) * 0x9E3779B97F4A7C15)` with wrapping arithmetic, where
//! `mix` is the SplitMix64 finalizer. Any draw can be computed directly from
//! `(seed, index)`, and child streams are seeded by [`SplitMix64::fork`].
//!
//! Bounded integers use the multiply-high reduction
//! `lo + ((x as u128 * span as u128) >> 64)`; no draws are ever rejected, so
//! every consumer uses a fixed number of draws.

use num_bigint::BigInt;

use crate::rational::Rational;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    seed: u64,
    index: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { seed, index: 0 }
    }

    /// Draw number `index` of the stream seeded with `seed`.
    pub fn draw_at(seed: u64, index: u64) -> u64 {
        mix(seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
    }

    /// Seed of child stream `stream`; independent of how far `self` has advanced.
    pub fn fork(&self, stream: u64) -> SplitMix64 {
        SplitMix64::new(mix(self.seed ^ mix(stream.wrapping_add(GOLDEN_GAMMA))))
    }

    pub fn position(&self) -> u64 {
        self.index
    }

    pub fn next_u64(&mut self) -> u64 {
        let v = SplitMix64::draw_at(self.seed, self.index);
        self.index += 1;
        v
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi as i128 - lo as i128 + 1) as u128;
        let off = ((self.next_u64() as u128 * span) >> 64) as i128;
        (lo as i128 + off) as i64
    }

    pub fn range_usize(&mut self, lo: usize, hi: usize) -> usize {
        self.range_i64(lo as i64, hi as i64) as usize
    }

    /// `p/q` with `p` then `q` drawn uniformly from `1..=magnitude`.
    pub fn positive_rational(&mut self, magnitude: u64) -> Rational {
        let m = magnitude.max(1) as i64;
        let p = self.range_i64(1, m);
        let q = self.range_i64(1, m);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    /// Uniformly chosen `size`-subset of `1..=n`, sorted (partial Fisher-Yates, `size` draws).
    pub fn subset(&mut self, n: usize, size: usize) -> Vec<usize> {
        let mut pool: Vec<usize> = (1..=n).collect();
        for t in 0..size {
            let pick = self.range_usize(t, n - 1);
            pool.swap(t, pick);
        }
        let mut out = pool[..size].to_vec();
        out.sort_unstable();
        out
    }
}
