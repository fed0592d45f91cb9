//! Seeded random inputs for property sweeps.
//!
//! Trial `t` of a sweep seeded with `s` uses the stream seeded with
//! `SplitMix64::draw_at(s, t)`, so any single trial can be replayed alone.

use crate::error::Result;
use crate::matrix::{ExactMatrix, IndexSet};
use crate::rational::int;
use crate::rng::SplitMix64;

pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    SplitMix64::draw_at(seed, trial)
}

/// Entries drawn row by row, uniform in `lo..=hi`.
pub fn random_integer_matrix(rng: &mut SplitMix64, rows: usize, cols: usize, lo: i64, hi: i64) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |_, _| int(rng.range_i64(lo, hi))).expect("positive dimensions")
}

/// Like [`random_integer_matrix`] but each entry is zeroed with probability
/// about `1/3` (one extra draw per entry, after the value).
pub fn random_sparse_matrix(rng: &mut SplitMix64, n: usize, lo: i64, hi: i64) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |_, _| {
        let v = rng.range_i64(lo, hi);
        if rng.next_u64().is_multiple_of(3) {
            int(0)
        } else {
            int(v)
        }
    })
    .expect("positive order")
}

/// Input to Sylvester's identity: `delta, gamma` lie outside `alpha` and have equal size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterInstance {
    pub a: ExactMatrix,
    pub alpha: IndexSet,
    pub delta: IndexSet,
    pub gamma: IndexSet,
}

/// Draw order: the matrix (entries in `-9..=9`), `|alpha|` in `0..=n-1`,
/// `alpha`, `|delta|` in `1..=n-|alpha|`, then `delta` and `gamma` as
/// subsets of the complement.
pub fn random_sylvester_instance(n: usize, seed: u64) -> Result<SylvesterInstance> {
    let mut rng = SplitMix64::new(seed);
    let a = random_integer_matrix(&mut rng, n, n, -9, 9);
    let s = rng.range_usize(0, n - 1);
    let alpha = IndexSet::new(rng.subset(n, s), n)?;
    let rest = alpha.complement();
    let l = rng.range_usize(1, rest.len());
    let pick = |rng: &mut SplitMix64| -> Result<IndexSet> {
        let pos = rng.subset(rest.len(), l);
        IndexSet::new(pos.iter().map(|p| rest.indices()[p - 1]).collect(), n)
    };
    let delta = pick(&mut rng)?;
    let gamma = pick(&mut rng)?;
    Ok(SylvesterInstance { a, alpha, delta, gamma })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_well_formed() {
        for seed in 0..50 {
            let n = 3 + (seed as usize % 4);
            let inst = random_sylvester_instance(n, seed).unwrap();
            assert!(inst.delta.is_disjoint(&inst.alpha));
            assert!(inst.gamma.is_disjoint(&inst.alpha));
            assert_eq!(inst.delta.len(), inst.gamma.len());
            assert!(!inst.delta.is_empty());
        }
    }

    #[test]
    fn sparse_matrices_have_zeros() {
        let mut rng = SplitMix64::new(3);
        let zeros: usize = (0..5)
            .map(|_| random_sparse_matrix(&mut rng, 5, 1, 9).entries().iter().filter(|v| **v == int(0)).count())
            .sum();
        assert!(zeros > 0);
    }
}
