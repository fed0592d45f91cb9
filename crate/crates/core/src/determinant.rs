//! Exact determinants and minors.
//!
//! Each row is cleared of denominators by multiplying through by the LCM of
//! its entries' denominators. Fraction-free (Bareiss) elimination then runs on
//! the integer matrix, and the result is divided by the product of the row
//! multipliers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Result, TpError};
use crate::matrix::{ExactMatrix, IndexSet};
use crate::rational::{lcm_of_denominators, Rational};

/// Determinant of a square integer matrix given as row-major `n*n` entries.
///
/// Every Bareiss division must be exact; a remainder means the elimination
/// itself is broken and is reported as a consistency error.
pub(crate) fn bareiss(n: usize, mut m: Vec<BigInt>) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !m[r * n + k].is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        m.swap(k * n + c, r * n + c);
                    }
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            let lead = m[i * n + k].clone();
            for j in k + 1..n {
                let num = &pivot * &m[i * n + j] - &lead * &m[k * n + j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(TpError::Consistency(
                        "inexact division in fraction-free elimination".into(),
                    ));
                }
                m[i * n + j] = q;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = m[n * n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Splits a square rational matrix into an integer matrix and the product of
/// per-row multipliers used to clear denominators.
pub(crate) fn integer_lift(a: &ExactMatrix) -> (Vec<BigInt>, BigInt) {
    let n = a.cols();
    let mut out = Vec::with_capacity(a.rows() * n);
    let mut scale = BigInt::one();
    for i in 1..=a.rows() {
        let row = a.row(i);
        let l = lcm_of_denominators(row);
        for v in row {
            out.push(v.numer() * (&l / v.denom()));
        }
        scale *= l;
    }
    (out, scale)
}

pub fn determinant(a: &ExactMatrix) -> Result<Rational> {
    if !a.is_square() {
        return Err(TpError::Shape(format!(
            "determinant needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let (ints, scale) = integer_lift(a);
    let det = bareiss(a.rows(), ints)?;
    Ok(Rational::new(det, scale))
}

/// `det A[rowSet, colSet]`.
pub fn minor(a: &ExactMatrix, row_set: &IndexSet, col_set: &IndexSet) -> Result<Rational> {
    if row_set.len() != col_set.len() {
        return Err(TpError::Shape(format!(
            "minor needs |rows| = |cols|, got {} and {}",
            row_set.len(),
            col_set.len()
        )));
    }
    determinant(&a.submatrix(row_set, col_set)?)
}

/// Minor from raw 1-based index slices (no bound checks beyond panics).
pub(crate) fn minor_at(a: &ExactMatrix, rows: &[usize], cols: &[usize]) -> Rational {
    determinant(&a.select(rows, cols)).expect("square selection")
}

/// Minor on the contiguous block starting at `(i, j)` with side `size`.
pub(crate) fn contiguous_minor(a: &ExactMatrix, i: usize, j: usize, size: usize) -> Rational {
    let rows: Vec<usize> = (i..i + size).collect();
    let cols: Vec<usize> = (j..j + size).collect();
    minor_at(a, &rows, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn hilbert_block() {
        let a = ExactMatrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 3), ratio(1, 4)],
        ])
        .unwrap();
        assert_eq!(determinant(&a).unwrap(), ratio(1, 72));
    }

    #[test]
    fn identity_is_one() {
        assert_eq!(determinant(&ExactMatrix::identity(5).unwrap()).unwrap(), int(1));
    }

    #[test]
    fn pivoting_tracks_sign() {
        let p = ExactMatrix::from_i64(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(determinant(&p).unwrap(), int(-1));
        let q = ExactMatrix::from_i64(&[[0, 0, 1], [0, 2, 0], [3, 0, 0]]).unwrap();
        assert_eq!(determinant(&q).unwrap(), int(-6));
    }

    #[test]
    fn singular_column() {
        let a = ExactMatrix::from_i64(&[[0, 1, 2], [0, 3, 4], [0, 5, 6]]).unwrap();
        assert_eq!(determinant(&a).unwrap(), int(0));
        let b = ExactMatrix::from_i64(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]).unwrap();
        assert_eq!(determinant(&b).unwrap(), int(0));
    }

    #[test]
    fn non_square_is_shape_error() {
        let a = ExactMatrix::from_i64(&[[1, 2, 3]]).unwrap();
        assert!(matches!(determinant(&a), Err(TpError::Shape(_))));
    }

    #[test]
    fn one_by_one_minor_is_entry() {
        let a = ExactMatrix::from_i64(&[[1, 2], [3, 4]]).unwrap();
        let r = IndexSet::new(vec![2], 2).unwrap();
        let c = IndexSet::new(vec![1], 2).unwrap();
        assert_eq!(minor(&a, &r, &c).unwrap(), int(3));
    }

    #[test]
    fn minor_cardinality_mismatch() {
        let a = ExactMatrix::from_i64(&[[1, 2], [3, 4]]).unwrap();
        let r = IndexSet::new(vec![1, 2], 2).unwrap();
        let c = IndexSet::new(vec![1], 2).unwrap();
        assert!(matches!(minor(&a, &r, &c), Err(TpError::Shape(_))));
    }
}
