//! TP_k versus TN_k on a few small matrices, with failing witnesses.

use tpkit::matrix::ExactMatrix;
use tpkit::positivity::{is_tn_k, is_tp_k};

fn main() -> tpkit::error::Result<()> {
    let cases = [
        ("pascal", ExactMatrix::from_i64(&[[1, 1, 1], [1, 2, 3], [1, 3, 6]])?),
        ("bidiagonal", ExactMatrix::from_i64(&[[1, 0, 0], [1, 1, 0], [0, 1, 1]])?),
        ("ones", ExactMatrix::from_i64(&[[1, 1, 1], [1, 1, 1], [1, 1, 1]])?),
    ];
    for (name, a) in &cases {
        let tp = is_tp_k(a, 3)?;
        let tn = is_tn_k(a, 3)?;
        print!("{name}: TP_3 {} / TN_3 {}", tp.holds, tn.holds);
        if let Some(w) = &tp.witness {
            print!(" (TP witness {:?}x{:?} = {})", w.rows.indices(), w.cols.indices(), w.value);
        }
        println!();
    }
    Ok(())
}
