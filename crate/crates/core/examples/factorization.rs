//! Generate a TP matrix from bidiagonal parameters and recover them.

use tpkit::io::{matrix_to_csv, params_to_json};
use tpkit::netfact::{assemble, factorize, generate_tp};

fn main() -> tpkit::error::Result<()> {
    let (a, params) = generate_tp(4, 11, 9)?;
    print!("{}", matrix_to_csv(&a));
    let recovered = factorize(&a)?;
    println!("{}", params_to_json(&recovered));
    println!("parameters recovered: {}", recovered == params);
    println!("round trip exact: {}", assemble(&recovered)? == a);
    Ok(())
}
