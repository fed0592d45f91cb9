use num_traits::Zero;

use crate::error::Result;
use crate::matrix::ExactMatrix;
use crate::rational::Rational;
use crate::rng::SplitMix64;

use super::{assemble, FactorizationParams};

/// Draws `n(n-1)/2` lowers, then as many uppers, then `n` diagonal entries,
/// each `p/q` with `p` then `q` uniform in `1..=magnitude`.
pub fn random_tp_params(n: usize, seed: u64, magnitude: u64) -> FactorizationParams {
    let mut rng = SplitMix64::new(seed);
    let k = n * (n - 1) / 2;
    let lowers: Vec<Rational> = (0..k).map(|_| rng.positive_rational(magnitude)).collect();
    let uppers: Vec<Rational> = (0..k).map(|_| rng.positive_rational(magnitude)).collect();
    let diag: Vec<Rational> = (0..n).map(|_| rng.positive_rational(magnitude)).collect();
    FactorizationParams::new(n, lowers, uppers, diag).expect("positive draws are valid parameters")
}

/// Same draws as [`random_tp_params`], followed by one extra draw per lower
/// then per upper parameter; the parameter is zeroed when that draw is
/// divisible by 3.
pub fn random_tn_params(n: usize, seed: u64, magnitude: u64) -> FactorizationParams {
    let mut rng = SplitMix64::new(seed);
    let k = n * (n - 1) / 2;
    let mut lowers: Vec<Rational> = (0..k).map(|_| rng.positive_rational(magnitude)).collect();
    let mut uppers: Vec<Rational> = (0..k).map(|_| rng.positive_rational(magnitude)).collect();
    let diag: Vec<Rational> = (0..n).map(|_| rng.positive_rational(magnitude)).collect();
    for v in lowers.iter_mut().chain(uppers.iter_mut()) {
        if rng.next_u64().is_multiple_of(3) {
            v.set_zero();
        }
    }
    FactorizationParams::new(n, lowers, uppers, diag).expect("nonnegative draws are valid parameters")
}

/// A TP matrix assembled from [`random_tp_params`].
pub fn generate_tp(n: usize, seed: u64, magnitude: u64) -> Result<(ExactMatrix, FactorizationParams)> {
    let params = random_tp_params(n, seed, magnitude);
    let a = assemble(&params)?;
    debug_assert!(crate::positivity::is_tp(&a)?.holds);
    Ok((a, params))
}

/// A nonsingular TN matrix from [`random_tn_params`].
pub fn generate_tn(n: usize, seed: u64, magnitude: u64) -> Result<(ExactMatrix, FactorizationParams)> {
    let params = random_tn_params(n, seed, magnitude);
    let a = assemble(&params)?;
    Ok((a, params))
}
