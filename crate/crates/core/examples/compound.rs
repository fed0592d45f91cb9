//! Second compound of the 4x4 matrix `1/(i+j)`: TP_2 but not TP_3.

use tpkit::compound::{compound, CompoundIndexMap};
use tpkit::fixtures::hilbert4;
use tpkit::io::matrix_to_csv;
use tpkit::positivity::is_tp_k;

fn main() -> tpkit::error::Result<()> {
    let a = hilbert4();
    let c = compound(&a, 2)?;
    let map = CompoundIndexMap::new(4, 4, 2)?;
    let sets: Vec<&[usize]> = map.row_sets.iter().map(|s| s.indices()).collect();
    println!("row/col subsets: {sets:?}");
    print!("{}", matrix_to_csv(&c));

    println!("A is TP_4: {}", is_tp_k(&a, 4)?.holds);
    println!("C_2(A) is TP_2: {}", is_tp_k(&c, 2)?.holds);
    let v = is_tp_k(&c, 3)?;
    let w = v.witness.expect("C_2(A) fails TP_3");
    println!("C_2(A) is TP_3: false, minor {:?} x {:?} = {}", w.rows.indices(), w.cols.indices(), w.value);
    Ok(())
}
