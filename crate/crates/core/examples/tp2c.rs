//! The ratio condition TP_2(c): above the threshold 4cos^2(pi/(n+1)) it
//! forces total positivity.

use num_traits::ToPrimitive;
use tpkit::matrix::ExactMatrix;
use tpkit::positivity::{is_tp, is_tp2c, tp2c_threshold, DEFAULT_THRESHOLD_BITS};
use tpkit::rational::{pow, ratio, Rational};

fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn main() -> tpkit::error::Result<()> {
    for n in 1..=6 {
        let t = tp2c_threshold(n, DEFAULT_THRESHOLD_BITS);
        println!("n={n}: threshold in [{:.12}, {:.12}]", approx(&t.lower), approx(&t.upper));
    }

    let c = ratio(13, 4);
    let n = 5;
    let a = ExactMatrix::from_fn(n, n, |i, j| pow(&c, (i * j) as u32))?;
    let th = tp2c_threshold(n, DEFAULT_THRESHOLD_BITS);
    println!("c = {c} certifies the threshold for n={n}: {}", th.certifies(&c));
    println!("TP_2(c): {}", is_tp2c(&a, &c)?.holds);
    println!("TP: {}", is_tp(&a)?.holds);
    Ok(())
}
