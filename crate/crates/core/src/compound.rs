//! k-th compound matrices with lexicographically ordered index sets.

use rayon::prelude::*;

use crate::determinant::minor_at;
use crate::error::{Result, TpError};
use crate::matrix::{ExactMatrix, IndexSet};

/// Largest source dimension accepted without an explicit override.
pub const COMPOUND_DIM_GUARD: usize = 16;

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let Some(p) = (0..k).rev().find(|&p| cur[p] < n - (k - 1 - p)) else {
            return out;
        };
        cur[p] += 1;
        for q in p + 1..k {
            cur[q] = cur[q - 1] + 1;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// 1-based lexicographic rank of a `k`-subset of `1..=n`.
pub fn lex_rank(set: &[usize], n: usize) -> usize {
    let k = set.len();
    let mut rank = 0;
    let mut prev = 0;
    for (p, &v) in set.iter().enumerate() {
        for skipped in prev + 1..v {
            rank += binomial(n - skipped, k - p - 1);
        }
        prev = v;
    }
    rank + 1
}

/// Row/column bookkeeping for `C_k` of an `m x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompoundIndexMap {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub row_sets: Vec<IndexSet>,
    pub col_sets: Vec<IndexSet>,
}

impl CompoundIndexMap {
    pub fn new(m: usize, n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > m.min(n) {
            return Err(TpError::InvalidOrder(format!(
                "compound order {k} outside 1..={}",
                m.min(n)
            )));
        }
        let to_sets = |bound: usize| {
            k_subsets(bound, k)
                .into_iter()
                .map(|s| IndexSet::new(s, bound).expect("generated subsets are valid"))
                .collect()
        };
        Ok(CompoundIndexMap {
            k,
            m,
            n,
            row_sets: to_sets(m),
            col_sets: to_sets(n),
        })
    }

    /// 1-based `(row, col)` position of the entry `det A[rowSet, colSet]`.
    pub fn entry_index(&self, row_set: &IndexSet, col_set: &IndexSet) -> Result<(usize, usize)> {
        if row_set.len() != self.k || col_set.len() != self.k {
            return Err(TpError::Shape(format!(
                "compound of order {} needs {}-subsets, got sizes {} and {}",
                self.k,
                self.k,
                row_set.len(),
                col_set.len()
            )));
        }
        if row_set.bound() != self.m || col_set.bound() != self.n {
            return Err(TpError::InvalidIndex(format!(
                "index set bounds ({}, {}) do not match source {}x{}",
                row_set.bound(),
                col_set.bound(),
                self.m,
                self.n
            )));
        }
        Ok((
            lex_rank(row_set.indices(), self.m),
            lex_rank(col_set.indices(), self.n),
        ))
    }
}

pub fn compound_entry_index(
    map: &CompoundIndexMap,
    row_set: &IndexSet,
    col_set: &IndexSet,
) -> Result<(usize, usize)> {
    map.entry_index(row_set, col_set)
}

/// `C_k(A)`; refuses sources larger than [`COMPOUND_DIM_GUARD`].
pub fn compound(a: &ExactMatrix, k: usize) -> Result<ExactMatrix> {
    compound_with_guard(a, k, false)
}

pub fn compound_with_guard(a: &ExactMatrix, k: usize, allow_large: bool) -> Result<ExactMatrix> {
    if !allow_large && a.rows().max(a.cols()) > COMPOUND_DIM_GUARD {
        return Err(TpError::TooLarge(format!(
            "compound of a {}x{} matrix exceeds the {COMPOUND_DIM_GUARD}-dimension guard",
            a.rows(),
            a.cols()
        )));
    }
    let map = CompoundIndexMap::new(a.rows(), a.cols(), k)?;
    let cells: Vec<(usize, usize)> = (0..map.row_sets.len())
        .flat_map(|r| (0..map.col_sets.len()).map(move |c| (r, c)))
        .collect();
    let data = cells
        .par_iter()
        .map(|&(r, c)| minor_at(a, map.row_sets[r].indices(), map.col_sets[c].indices()))
        .collect();
    ExactMatrix::new(map.row_sets.len(), map.col_sets.len(), data)
}
