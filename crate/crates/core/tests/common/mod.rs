//! Reference oracles for the integration suites. Nothing here calls the
//! library's determinant, compound or positivity code.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use tpkit::matrix::ExactMatrix;
use tpkit::rational::Rational;

pub fn r(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

/// Cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    match n {
        0 => Rational::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut acc = Rational::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Rational>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &m[0][c] * cofactor_det(&sub);
                if c % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

pub fn rows_of(a: &ExactMatrix) -> Vec<Vec<Rational>> {
    (1..=a.rows()).map(|i| (1..=a.cols()).map(|j| a.get(i, j).clone()).collect()).collect()
}

/// Minor on 1-based index lists.
pub fn oracle_minor(a: &ExactMatrix, rows: &[usize], cols: &[usize]) -> Rational {
    let sub: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| a.get(i, j).clone()).collect())
        .collect();
    cofactor_det(&sub)
}

pub fn oracle_det(a: &ExactMatrix) -> Rational {
    cofactor_det(&rows_of(a))
}

/// All `k`-subsets of `1..=n` in lexicographic order, via bitmasks.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|b| m & (1 << b) != 0).map(|b| b + 1).collect())
        .collect();
    out.sort();
    out
}

/// Every minor of order `1..=k` positive.
pub fn brute_tp(a: &ExactMatrix, k: usize) -> bool {
    (1..=k).all(|r| {
        subsets(a.rows(), r)
            .iter()
            .all(|rs| subsets(a.cols(), r).iter().all(|cs| oracle_minor(a, rs, cs).is_positive()))
    })
}

/// Every minor of order `1..=k` nonnegative.
pub fn brute_tn(a: &ExactMatrix, k: usize) -> bool {
    (1..=k).all(|r| {
        subsets(a.rows(), r)
            .iter()
            .all(|rs| subsets(a.cols(), r).iter().all(|cs| !oracle_minor(a, rs, cs).is_negative()))
    })
}

/// `det A[{i..i+s-1}, {j..j+s-1}]`.
pub fn oracle_contiguous(a: &ExactMatrix, i: usize, j: usize, s: usize) -> Rational {
    let rows: Vec<usize> = (i..i + s).collect();
    let cols: Vec<usize> = (j..j + s).collect();
    oracle_minor(a, &rows, &cols)
}

pub fn matrix(rows: Vec<Vec<i64>>) -> ExactMatrix {
    ExactMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(self::r).collect()).collect()).unwrap()
}

/// Square integer matrices of order `lo..=hi` with entries in `-bound..=bound`.
pub fn int_square(lo: usize, hi: usize, bound: i64) -> impl Strategy<Value = ExactMatrix> {
    (lo..=hi).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, n), n).prop_map(matrix)
    })
}

/// Rectangular integer matrices.
pub fn int_rect(lo: usize, hi: usize, bound: i64) -> impl Strategy<Value = ExactMatrix> {
    (lo..=hi, lo..=hi).prop_flat_map(move |(m, n)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, n), m).prop_map(matrix)
    })
}

/// Small positive rationals `p/q`.
pub fn pos_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(p, d)| q(p, d))
}
