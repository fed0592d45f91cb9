//! The 4x4 matrix of 2x2 minors on the index sets {1,2}, {1,3}, {1,4}, {2,3}:
//! its entries are polynomials in the twelve top network weights, and no
//! reordering of those index sets makes it TP_3.

use tpkit::netfact::{build_s_matrix, displayed_minors, s_matrix_formulas, SMatrixParams, TopWeights};
use tpkit::positivity::check_ordering_invariance;
use tpkit::rng::SplitMix64;

fn main() -> tpkit::error::Result<()> {
    let top = TopWeights::random(&mut SplitMix64::new(4), 9);
    let (s, _) = build_s_matrix(&SMatrixParams::with_unit_fill(4, top.clone())?)?;
    println!("S matches the weight formulas: {}", s == s_matrix_formulas(&top));
    for m in displayed_minors(&top) {
        let sign = if m.negative { "<0" } else { ">0" };
        println!("{:?} x {:?} {sign}: {} = {}", m.rows, m.cols, m.formula, m.value);
    }
    let inv = check_ordering_invariance(&s)?;
    println!("orderings failing TP_3: {}/{}", inv.failing_tp3(), inv.cases.len());
    Ok(())
}
