//! The 4x4 matrix `S = (det A[S_i, S_j])` of order-`(n-2)` minors used to show
//! that `C_{n-2}(A)` is never `TP_3`, with
//!
//! ```text
//! S_1 = {1..n-3, n-2}   S_2 = {1..n-3, n-1}   S_3 = {1..n-3, n}   S_4 = {1..n-4, n-2, n-1}
//! ```
//!
//! The twelve named weights `a..f` (lower) and `g..l` (upper, `l` standing for
//! ell) sit on the leading edges of the last three factor groups:
//!
//! ```text
//! a = first edge of lower group n-3      l = first edge of upper group n-3
//! b, c = lower group n-2                 k, j = upper group n-2
//! d, e, f = lower group n-1              i, h, g = upper group n-1
//! ```
//!
//! At `n = 4` this is `a..f = l_1..l_6` and `l, k, j, i, h, g = u_1..u_6`.

use num_traits::{One, Signed};

use crate::determinant::minor;
use crate::error::{Result, TpError};
use crate::matrix::{ExactMatrix, IndexSet};
use crate::rational::Rational;
use crate::rng::SplitMix64;

use super::{assemble, group_start, random_tp_params, FactorizationParams};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopWeights {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
    pub h: Rational,
    pub i: Rational,
    pub j: Rational,
    pub k: Rational,
    pub l: Rational,
}

impl TopWeights {
    pub fn constant(v: Rational) -> Self {
        TopWeights {
            a: v.clone(),
            b: v.clone(),
            c: v.clone(),
            d: v.clone(),
            e: v.clone(),
            f: v.clone(),
            g: v.clone(),
            h: v.clone(),
            i: v.clone(),
            j: v.clone(),
            k: v.clone(),
            l: v,
        }
    }

    /// Twelve positive rationals drawn in the order `a, b, ..., l`.
    pub fn random(rng: &mut SplitMix64, magnitude: u64) -> Self {
        let mut next = || rng.positive_rational(magnitude);
        TopWeights {
            a: next(),
            b: next(),
            c: next(),
            d: next(),
            e: next(),
            f: next(),
            g: next(),
            h: next(),
            i: next(),
            j: next(),
            k: next(),
            l: next(),
        }
    }

    fn all(&self) -> [&Rational; 12] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f, &self.g, &self.h, &self.i, &self.j, &self.k, &self.l]
    }
}

/// Named top weights over a full parameter set whose remaining entries fill the rest of the network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMatrixParams {
    pub top: TopWeights,
    pub base: FactorizationParams,
}

impl SMatrixParams {
    pub fn new(top: TopWeights, base: FactorizationParams) -> Result<Self> {
        if base.n < 4 {
            return Err(TpError::InvalidOrder(format!("S-matrix needs order at least 4, got {}", base.n)));
        }
        base.validate()?;
        if top.all().iter().any(|v| !v.is_positive()) {
            return Err(TpError::Domain("named weights must be positive".into()));
        }
        if !base.all_positive() {
            return Err(TpError::Domain("network parameters must be positive".into()));
        }
        Ok(SMatrixParams { top, base })
    }

    /// Remaining parameters all 1 and `D = I`.
    pub fn with_unit_fill(n: usize, top: TopWeights) -> Result<Self> {
        if n < 4 {
            return Err(TpError::InvalidOrder(format!("S-matrix needs order at least 4, got {n}")));
        }
        SMatrixParams::new(top, super::constant_params(n, Rational::one()))
    }

    /// Remaining parameters and diagonal drawn by [`random_tp_params`].
    pub fn with_random_fill(n: usize, top: TopWeights, seed: u64, magnitude: u64) -> Result<Self> {
        if n < 4 {
            return Err(TpError::InvalidOrder(format!("S-matrix needs order at least 4, got {n}")));
        }
        SMatrixParams::new(top, random_tp_params(n, seed, magnitude))
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    /// `base` with the twelve named slots overwritten.
    pub fn network_params(&self) -> FactorizationParams {
        let n = self.n();
        let t = &self.top;
        let mut p = self.base.clone();
        let (g1, g2, g3) = (group_start(n - 3), group_start(n - 2), group_start(n - 1));
        for (slot, v) in [(g1, &t.a), (g2, &t.b), (g2 + 1, &t.c), (g3, &t.d), (g3 + 1, &t.e), (g3 + 2, &t.f)] {
            p.lowers[slot].1 = v.clone();
        }
        for (slot, v) in [(g1, &t.l), (g2, &t.k), (g2 + 1, &t.j), (g3, &t.i), (g3 + 1, &t.h), (g3 + 2, &t.g)] {
            p.uppers[slot].1 = v.clone();
        }
        p
    }
}

pub fn s_index_sets(n: usize) -> Result<[IndexSet; 4]> {
    if n < 4 {
        return Err(TpError::InvalidOrder(format!("S-matrix needs order at least 4, got {n}")));
    }
    let head = |upto: usize, tail: &[usize]| {
        let mut v: Vec<usize> = (1..=upto).collect();
        v.extend_from_slice(tail);
        IndexSet::new(v, n).expect("sets are increasing and in range")
    };
    Ok([
        head(n - 3, &[n - 2]),
        head(n - 3, &[n - 1]),
        head(n - 3, &[n]),
        head(n - 4, &[n - 2, n - 1]),
    ])
}

/// Returns `(S, A)` with `A` the network matrix.
pub fn build_s_matrix(p: &SMatrixParams) -> Result<(ExactMatrix, ExactMatrix)> {
    let a = assemble(&p.network_params())?;
    let sets = s_index_sets(p.n())?;
    let mut rows = Vec::with_capacity(4);
    for r in &sets {
        let mut row = Vec::with_capacity(4);
        for c in &sets {
            row.push(minor(&a, r, c)?);
        }
        rows.push(row);
    }
    Ok((ExactMatrix::from_rows(rows)?, a))
}

/// The sixteen path-count polynomials for `s_{i,j}`, valid when `D = I`.
pub fn s_matrix_formulas(t: &TopWeights) -> ExactMatrix {
    let TopWeights { a, b, c, d, e, f, g, h, i, j, k, l } = t;
    let one = Rational::one();
    let s24 = b * h * j + e * h * j + b * h * l + e * h * l + b * k * l + e * k * l + g + j + l;
    let s44 = a * b * h * j + a * e * h * j + c * e * h * j + a * b * h * l + a * e * h * l + c * e * h * l
        + a * b * k * l
        + a * e * k * l
        + c * e * k * l
        + a * g
        + c * g
        + f * g
        + a * j
        + c * j
        + f * j
        + a * l
        + c * l
        + f * l
        + &one;
    let rows = vec![
        vec![one.clone(), h + k, h * i, j * h + l * h + l * k],
        vec![b + e, b * h + e * h + b * k + e * k + &one, b * h * i + e * h * i + i, s24],
        vec![
            d * e,
            d * e * h + d * e * k + d,
            d * e * h * i + d * i + &one,
            d * e * h * j + d * e * h * l + d * e * k * l + d * g + d * j + d * l,
        ],
        vec![
            a * b + a * e + c * e,
            a * b * h + a * e * h + c * e * h + a * b * k + a * e * k + c * e * k + a + c + f,
            a * b * h * i + a * e * h * i + c * e * h * i + a * i + c * i + f * i,
            s44,
        ],
    ];
    ExactMatrix::from_rows(rows).expect("4x4")
}

/// One of the eight `3x3` minors of `S` whose signs rule out `TP_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisplayedMinor {
    pub rows: [usize; 3],
    pub cols: [usize; 3],
    pub formula: &'static str,
    /// The closed form evaluated at the named weights.
    pub value: Rational,
    /// Sign the minor carries for every positive parameter choice.
    pub negative: bool,
}

impl DisplayedMinor {
    pub fn row_set(&self) -> IndexSet {
        IndexSet::new(self.rows.to_vec(), 4).expect("valid")
    }

    pub fn col_set(&self) -> IndexSet {
        IndexSet::new(self.cols.to_vec(), 4).expect("valid")
    }

    pub fn has_expected_sign(&self, actual: &Rational) -> bool {
        if self.negative {
            actual.is_negative()
        } else {
            actual.is_positive()
        }
    }
}

pub fn displayed_minors(t: &TopWeights) -> Vec<DisplayedMinor> {
    let TopWeights { a, b, c, d, e, f, g, h, i, j, k, l } = t;
    let m = |rows, cols, formula, value: Rational, negative| DisplayedMinor { rows, cols, formula, value, negative };
    vec![
        m([1, 2, 3], [1, 3, 4], "-g-j-l", -(g + j + l), true),
        m([1, 2, 3], [2, 3, 4], "-gh-gk-jk", -(g * h + g * k + j * k), true),
        m([1, 2, 4], [1, 3, 4], "i", i.clone(), false),
        m([1, 2, 4], [2, 3, 4], "ik", i * k, false),
        m([1, 3, 4], [1, 2, 3], "-a-c-f", -(a + c + f), true),
        m([2, 3, 4], [1, 2, 3], "-bc-bf-ef", -(b * c + b * f + e * f), true),
        m([1, 3, 4], [1, 2, 4], "d", d.clone(), false),
        m([2, 3, 4], [1, 2, 4], "bd", b * d, false),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn index_sets_at_four() {
        let s = s_index_sets(4).unwrap();
        let got: Vec<Vec<usize>> = s.iter().map(|x| x.indices().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3]]);
        assert!(matches!(s_index_sets(3), Err(TpError::InvalidOrder(_))));
    }

    #[test]
    fn unit_instantiation() {
        let p = SMatrixParams::with_unit_fill(4, TopWeights::constant(int(1))).unwrap();
        let (s, _) = build_s_matrix(&p).unwrap();
        assert_eq!(s.get(1, 2), &int(2));
        assert_eq!(s.get(1, 3), &int(1));
        assert_eq!(s, s_matrix_formulas(&p.top));
        for dm in displayed_minors(&p.top) {
            let v = minor(&s, &dm.row_set(), &dm.col_set()).unwrap();
            assert_eq!(v, dm.value, "{}", dm.formula);
        }
    }

    #[test]
    fn formulas_hold_beyond_order_four() {
        let mut rng = SplitMix64::new(5);
        for n in 5..=6 {
            let top = TopWeights::random(&mut rng, 7);
            let mut base = random_tp_params(n, 9, 7);
            base.diag = vec![Rational::one(); n];
            let p = SMatrixParams::new(top, base).unwrap();
            let (s, _) = build_s_matrix(&p).unwrap();
            assert_eq!(s, s_matrix_formulas(&p.top), "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(SMatrixParams::with_unit_fill(3, TopWeights::constant(int(1))).is_err());
        assert!(SMatrixParams::with_unit_fill(4, TopWeights::constant(int(0))).is_err());
    }
}
