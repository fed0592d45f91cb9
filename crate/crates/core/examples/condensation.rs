//! Dodgson condensation of a 6x6 TP matrix, with the zero-divisor fallback
//! shown on a matrix with an interior zero.

use tpkit::condensation::{condensation_sequence, condense};
use tpkit::fixtures::condensation6;
use tpkit::io::matrix_to_csv;
use tpkit::matrix::ExactMatrix;
use tpkit::positivity::is_tp_k;

fn main() -> tpkit::error::Result<()> {
    let a = condensation6();
    let d1 = condense(&a, 1)?;
    print!("D_1(A) =\n{}", matrix_to_csv(&d1));
    println!("D_1(A) TP_3: {}", is_tp_k(&d1, 3)?.holds);
    let v = is_tp_k(&d1, 4)?;
    let w = v.witness.expect("D_1(A) is not TP_4");
    println!("D_1(A) TP_4: false, witness rows {:?} value {}", w.rows.indices(), w.value);

    let z = ExactMatrix::from_i64(&[[1, 2, 3], [4, 0, 6], [7, 8, 10]])?;
    let seq = condensation_sequence(&z)?;
    println!("det via condensation: {} (fallback used: {})", seq.determinant(), seq.used_fallback());
    Ok(())
}
