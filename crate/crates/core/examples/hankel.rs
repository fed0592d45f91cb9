//! Moment sequences give TP Hankel matrices, and condensation keeps them Hankel.

use tpkit::hankel::{check_hankel_condensations, hankel_from_sequence, is_tp_hankel, moment_spec};
use tpkit::io::matrix_to_csv;

fn main() -> tpkit::error::Result<()> {
    let spec = moment_spec(4, 2, 5)?;
    let a = hankel_from_sequence(&spec)?;
    print!("{}", matrix_to_csv(&a));
    println!("TP via positive definiteness: {}", is_tp_hankel(&a)?.holds);
    let check = check_hankel_condensations(&spec)?;
    for s in &check.stages {
        let tp = s.tp.as_ref().is_some_and(|v| v.holds);
        let shift = match s.shift_commutes {
            Some(b) => b.to_string(),
            None => "n/a".into(),
        };
        println!("D_{}: hankel {} tp {tp} shift commutes {shift}", s.k, s.hankel);
    }
    println!("status: {}", check.status().as_str());
    Ok(())
}
