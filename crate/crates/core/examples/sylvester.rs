//! Sylvester's determinantal identity on a random 5x5 integer matrix.

use tpkit::condensation::{corner_minor_check, sylvester_check};
use tpkit::corpus::random_integer_matrix;
use tpkit::matrix::IndexSet;
use tpkit::rng::SplitMix64;

fn main() -> tpkit::error::Result<()> {
    let a = random_integer_matrix(&mut SplitMix64::new(5), 5, 5, -9, 9);
    let alpha = IndexSet::new(vec![2, 3], 5)?;
    let delta = IndexSet::new(vec![1, 4], 5)?;
    let gamma = IndexSet::new(vec![1, 5], 5)?;
    let s = sylvester_check(&a, &alpha, &delta, &gamma)?;
    println!("det B[delta, gamma]                          = {}", s.lhs);
    println!("det A[alpha]^(l-1) det A[alpha+delta, alpha+gamma] = {}", s.rhs);
    println!("holds: {}", s.holds);

    let c = corner_minor_check(&a)?;
    println!("corner form: {} = {} ({})", c.lhs, c.rhs, c.holds);
    Ok(())
}
