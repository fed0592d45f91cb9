//! Dense matrices over the rationals and the index sets used to address them.
//!
//! All public indexing is 1-based: entry `(1, 1)` is the top-left corner and an
//! [`IndexSet`] holds row or column labels in `1..=bound`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Result, TpError};
use crate::rational::{format_rational, int, Rational};

/// Strictly increasing list of 1-based indices drawn from `1..=bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    indices: Vec<usize>,
    bound: usize,
}

impl IndexSet {
    pub fn new(indices: Vec<usize>, bound: usize) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > bound) {
            return Err(TpError::InvalidIndex(format!(
                "index {bad} outside 1..={bound}"
            )));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(TpError::InvalidIndex(format!(
                "indices {indices:?} are not strictly increasing"
            )));
        }
        Ok(IndexSet { indices, bound })
    }

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn range(lo: usize, hi: usize, bound: usize) -> Result<Self> {
        IndexSet::new((lo..=hi).collect(), bound)
    }

    pub fn full(bound: usize) -> Self {
        IndexSet {
            indices: (1..=bound).collect(),
            bound,
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn complement(&self) -> IndexSet {
        IndexSet {
            indices: (1..=self.bound).filter(|i| !self.contains(*i)).collect(),
            bound: self.bound,
        }
    }

    pub fn union(&self, other: &IndexSet) -> Result<IndexSet> {
        if self.bound != other.bound {
            return Err(TpError::InvalidIndex(format!(
                "bounds differ: {} vs {}",
                self.bound, other.bound
            )));
        }
        let mut all: Vec<usize> = self.indices.iter().chain(&other.indices).copied().collect();
        all.sort_unstable();
        all.dedup();
        Ok(IndexSet {
            indices: all,
            bound: self.bound,
        })
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.indices.iter().all(|i| !other.contains(*i))
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.indices.iter().all(|i| other.contains(*i))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (p, i) in self.indices.iter().enumerate() {
            if p > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Dense `rows x cols` matrix of exact rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(TpError::Shape(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(TpError::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, bad)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(TpError::Shape(format!(
                "ragged rows: row {} has {} entries, expected {c}",
                i + 1,
                bad.len()
            )));
        }
        ExactMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer literals.
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    /// Builds a matrix from a 1-based entry function.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix::new(rows, cols, data)
    }

    pub fn identity(n: usize) -> Result<Self> {
        ExactMatrix::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        ExactMatrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn diagonal(values: &[Rational]) -> Result<Self> {
        let n = values.len();
        ExactMatrix::from_fn(n, n, |i, j| {
            if i == j {
                values[i - 1].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    /// Entry at 1-based `(i, j)`. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i},{j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.data[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[(i - 1) * self.cols..i * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.cols).map(<[Rational]>::to_vec).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
            .expect("transpose keeps positive dimensions")
    }

    pub fn scale(&self, s: &Rational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(TpError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        ExactMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Rational::zero();
            for t in 1..=self.cols {
                let a = self.get(i, t);
                if !a.is_zero() {
                    acc += a * rhs.get(t, j);
                }
            }
            acc
        })
    }

    fn zip_with(&self, rhs: &ExactMatrix, op: impl Fn(&Rational, &Rational) -> Rational) -> Result<ExactMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(TpError::Shape(format!(
                "dimension mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        ExactMatrix::new(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| op(a, b)).collect(),
        )
    }

    pub fn checked_add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (1..=self.rows).all(|i| (1..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `A[rowSet, colSet]`.
    pub fn submatrix(&self, row_set: &IndexSet, col_set: &IndexSet) -> Result<ExactMatrix> {
        if row_set.bound() != self.rows || col_set.bound() != self.cols {
            return Err(TpError::InvalidIndex(format!(
                "index set bounds ({}, {}) do not match {}x{} matrix",
                row_set.bound(),
                col_set.bound(),
                self.rows,
                self.cols
            )));
        }
        if row_set.is_empty() || col_set.is_empty() {
            return Err(TpError::InvalidIndex("empty index set".into()));
        }
        let r = row_set.indices();
        let c = col_set.indices();
        ExactMatrix::from_fn(r.len(), c.len(), |p, q| self.get(r[p - 1], c[q - 1]).clone())
    }

    /// Submatrix from raw 1-based index slices, skipping bound bookkeeping.
    pub(crate) fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(rows.len(), cols.len(), |p, q| self.get(rows[p - 1], cols[q - 1]).clone())
            .expect("nonempty selection")
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).expect("dimension mismatch in matrix product")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_add(rhs).expect("dimension mismatch in matrix sum")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_sub(rhs).expect("dimension mismatch in matrix difference")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(format_rational).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.cols) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}
