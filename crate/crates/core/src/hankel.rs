//! Hankel matrices `(a_{i+j})`, the positive-definiteness test for their total
//! positivity, and closure of TP Hankel matrices under condensation.
//!
//! A Hankel matrix `A` of order `n + 1` is TP exactly when both `A` and its
//! shift `A' = A[{1..n}, {2..n+1}]` are positive definite, which needs only
//! `2n + 1` leading principal minors instead of every minor.

use num_traits::{One, Zero};

use crate::condensation::condense;
use crate::error::{Result, TpError};
use crate::matrix::{ExactMatrix, IndexSet};
use crate::positivity::{first_nonpositive_leading_minor, leading_verdict, Property, PositivityVerdict, Witness};
use crate::rational::Rational;
use crate::report::Status;
use crate::rng::SplitMix64;

/// A sequence `a_0, ..., a_{2n}` inducing an `(n+1) x (n+1)` Hankel matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelSpec {
    pub sequence: Vec<Rational>,
}

impl HankelSpec {
    pub fn new(sequence: Vec<Rational>) -> Result<Self> {
        let spec = HankelSpec { sequence };
        spec.order()?;
        Ok(spec)
    }

    /// Matrix order `n + 1`.
    pub fn order(&self) -> Result<usize> {
        let len = self.sequence.len();
        if len.is_multiple_of(2) {
            return Err(TpError::Shape(format!("Hankel sequence needs odd length, got {len}")));
        }
        Ok(len / 2 + 1)
    }
}

/// Entry `(i, j)` is `a_{i+j-2}`.
pub fn hankel_from_sequence(spec: &HankelSpec) -> Result<ExactMatrix> {
    let m = spec.order()?;
    ExactMatrix::from_fn(m, m, |i, j| spec.sequence[i + j - 2].clone())
}

/// Square with constant antidiagonals.
pub fn is_hankel(a: &ExactMatrix) -> bool {
    if !a.is_square() {
        return false;
    }
    let n = a.rows();
    (1..=n).all(|i| (1..n).all(|j| i == 1 || a.get(i, j) == a.get(i - 1, j + 1)))
}

/// The generating sequence of a Hankel matrix.
pub fn hankel_sequence(a: &ExactMatrix) -> Result<HankelSpec> {
    if !is_hankel(a) {
        return Err(TpError::Domain("matrix is not Hankel".into()));
    }
    let n = a.rows();
    let mut seq: Vec<Rational> = (1..=n).map(|j| a.get(1, j).clone()).collect();
    seq.extend((2..=n).map(|i| a.get(i, n).clone()));
    HankelSpec::new(seq)
}

/// `A[{1..n}, {2..n+1}]` for a Hankel `A` of order `n + 1`.
pub fn shifted_hankel(a: &ExactMatrix) -> Result<ExactMatrix> {
    if !is_hankel(a) {
        return Err(TpError::Domain("matrix is not Hankel".into()));
    }
    let m = a.rows();
    if m < 2 {
        return Err(TpError::InvalidOrder("the shift of a 1x1 Hankel matrix is empty".into()));
    }
    a.submatrix(&IndexSet::range(1, m - 1, m)?, &IndexSet::range(2, m, m)?)
}

/// All leading principal minors positive.
pub fn is_positive_definite(a: &ExactMatrix) -> Result<PositivityVerdict> {
    if !a.is_symmetric() {
        return Err(TpError::Domain("positive definiteness needs a symmetric matrix".into()));
    }
    Ok(leading_verdict(a, Property::PositiveDefinite))
}

/// TP test for Hankel matrices. A failure inside the shift is reported in the
/// coordinates of `A`: rows `{1..r}`, columns `{2..r+1}`.
pub fn is_tp_hankel(a: &ExactMatrix) -> Result<PositivityVerdict> {
    if !is_hankel(a) {
        return Err(TpError::Domain("matrix is not Hankel".into()));
    }
    let m = a.rows();
    let v = leading_verdict(a, Property::TpHankel);
    if !v.holds || m == 1 {
        return Ok(v);
    }
    let shift = shifted_hankel(a)?;
    Ok(match first_nonpositive_leading_minor(&shift) {
        None => v,
        Some((r, value)) => PositivityVerdict {
            property: Property::TpHankel,
            order: m,
            holds: false,
            witness: Some(Witness {
                rows: IndexSet::range(1, r, m)?,
                cols: IndexSet::range(2, r + 1, m)?,
                value,
            }),
        },
    })
}

/// One condensation stage of a TP Hankel matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelStage {
    pub k: usize,
    pub condensed: ExactMatrix,
    pub hankel: bool,
    /// `None` when the stage is not Hankel.
    pub tp: Option<PositivityVerdict>,
    /// `D_k(A)' = D_k(A')`, checked for `k <= n - 1`.
    pub shift_commutes: Option<bool>,
}

impl HankelStage {
    pub fn ok(&self) -> bool {
        self.hankel && self.tp.as_ref().is_some_and(|v| v.holds) && self.shift_commutes != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelCondensationCheck {
    pub source: ExactMatrix,
    pub stages: Vec<HankelStage>,
}

impl HankelCondensationCheck {
    pub fn status(&self) -> Status {
        if self.stages.iter().all(HankelStage::ok) {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Condenses a TP Hankel matrix of order `n + 1` for every `k` in `1..=n`,
/// checking that each `D_k` is Hankel and TP and commutes with the shift.
pub fn check_hankel_condensations(spec: &HankelSpec) -> Result<HankelCondensationCheck> {
    let a = hankel_from_sequence(spec)?;
    if !is_tp_hankel(&a)?.holds {
        return Err(TpError::Hypothesis("Hankel matrix is not TP".into()));
    }
    let m = a.rows();
    let n = m - 1;
    let shift = if m > 1 { Some(shifted_hankel(&a)?) } else { None };
    let stages = (1..=n)
        .map(|k| {
            let d = condense(&a, k)?;
            let hankel = is_hankel(&d);
            let tp = if hankel { Some(is_tp_hankel(&d)?) } else { None };
            let shift_commutes = match &shift {
                Some(s) if k < n && hankel => Some(shifted_hankel(&d)? == condense(s, k)?),
                Some(_) if k < n => Some(false),
                _ => None,
            };
            Ok(HankelStage {
                k,
                condensed: d,
                hankel,
                tp,
                shift_commutes,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HankelCondensationCheck { source: a, stages })
}

/// Moments `a_k = sum_t w_t x_t^k` of a discrete positive measure on `nodes`
/// points, giving a TP Hankel matrix of order `nodes`.
///
/// Draw order: `nodes` positive increments (node `x_t` is their running sum),
/// then `nodes` weights, each via [`SplitMix64::positive_rational`].
pub fn moment_spec(nodes: usize, seed: u64, magnitude: u64) -> Result<HankelSpec> {
    if nodes == 0 {
        return Err(TpError::InvalidOrder("need at least one node".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut x = Vec::with_capacity(nodes);
    let mut acc = Rational::zero();
    for _ in 0..nodes {
        acc += rng.positive_rational(magnitude);
        x.push(acc.clone());
    }
    let w: Vec<Rational> = (0..nodes).map(|_| rng.positive_rational(magnitude)).collect();
    let mut powers: Vec<Rational> = vec![Rational::one(); nodes];
    let mut seq = Vec::with_capacity(2 * nodes - 1);
    for _ in 0..2 * nodes - 1 {
        seq.push(powers.iter().zip(&w).map(|(p, wt)| p * wt).sum());
        for (p, xt) in powers.iter_mut().zip(&x) {
            *p *= xt;
        }
    }
    HankelSpec::new(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positivity::is_tp;
    use crate::rational::{int, ratio};

    fn seq(v: &[Rational]) -> HankelSpec {
        HankelSpec::new(v.to_vec()).unwrap()
    }

    fn hilbert_like(len: i64) -> HankelSpec {
        seq(&(0..len).map(|k| ratio(1, k + 2)).collect::<Vec<_>>())
    }

    #[test]
    fn construction() {
        let a = hankel_from_sequence(&seq(&[int(1), ratio(1, 2), ratio(1, 3)])).unwrap();
        assert_eq!(a, ExactMatrix::from_rows(vec![vec![int(1), ratio(1, 2)], vec![ratio(1, 2), ratio(1, 3)]]).unwrap());
        assert!(matches!(HankelSpec::new(vec![int(1), int(2)]), Err(TpError::Shape(_))));
        let ex = hankel_from_sequence(&hilbert_like(7)).unwrap();
        assert_eq!(ex.get(4, 4), &ratio(1, 8));
        assert_eq!(hankel_sequence(&ex).unwrap(), hilbert_like(7));
        let ones = hankel_from_sequence(&seq(&vec![int(1); 5])).unwrap();
        assert!(ones.entries().iter().all(|v| v == &int(1)));
    }

    #[test]
    fn shift() {
        let a = hankel_from_sequence(&seq(&[int(1), ratio(1, 2), ratio(1, 3)])).unwrap();
        assert_eq!(shifted_hankel(&a).unwrap(), ExactMatrix::from_rows(vec![vec![ratio(1, 2)]]).unwrap());
        let ex = hankel_from_sequence(&hilbert_like(7)).unwrap();
        let want = hankel_from_sequence(&seq(&(1..6).map(|k| ratio(1, k + 2)).collect::<Vec<_>>())).unwrap();
        assert_eq!(shifted_hankel(&ex).unwrap(), want);
        let not = ExactMatrix::from_i64(&[[1, 2], [3, 4]]).unwrap();
        assert!(matches!(shifted_hankel(&not), Err(TpError::Domain(_))));
    }

    #[test]
    fn positive_definite() {
        assert!(is_positive_definite(&ExactMatrix::from_i64(&[[2, 1], [1, 2]]).unwrap()).unwrap().holds);
        let v = is_positive_definite(&ExactMatrix::from_i64(&[[1, 2], [2, 1]]).unwrap()).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().value, int(-3));
        assert!(matches!(
            is_positive_definite(&ExactMatrix::from_i64(&[[1, 2], [3, 1]]).unwrap()),
            Err(TpError::Domain(_))
        ));
    }

    #[test]
    fn tp_criterion() {
        let ex = hankel_from_sequence(&hilbert_like(7)).unwrap();
        assert!(is_tp_hankel(&ex).unwrap().holds);
        let ones = hankel_from_sequence(&seq(&vec![int(1); 5])).unwrap();
        assert!(!is_tp_hankel(&ones).unwrap().holds);
        let bad = hankel_from_sequence(&seq(&[int(1), int(1), int(2), int(1), int(1)])).unwrap();
        let v = is_tp_hankel(&bad).unwrap();
        assert!(!v.holds);
        assert!(!is_tp(&bad).unwrap().holds);
        assert!(v.witness_reproduces(&bad));
    }

    #[test]
    fn shift_witness_maps_back() {
        // A = I is positive definite, its shift [[0]] is not
        let a = hankel_from_sequence(&seq(&[int(1), int(0), int(1)])).unwrap();
        let v = is_tp_hankel(&a).unwrap();
        assert!(!v.holds);
        let w = v.witness.as_ref().unwrap();
        assert_eq!((w.rows.indices(), w.cols.indices()), (&[1][..], &[2][..]));
        assert!(v.witness_reproduces(&a));
    }

    #[test]
    fn condensations_of_tp_hankel() {
        for len in [7, 9] {
            let c = check_hankel_condensations(&hilbert_like(len)).unwrap();
            assert_eq!(c.status(), Status::Pass);
            assert_eq!(c.stages.len() as i64, len / 2);
        }
        let single = check_hankel_condensations(&seq(&[int(3)])).unwrap();
        assert!(single.stages.is_empty());
        assert_eq!(single.status(), Status::Pass);
        assert!(matches!(
            check_hankel_condensations(&seq(&vec![int(1); 5])),
            Err(TpError::Hypothesis(_))
        ));
    }

    #[test]
    fn moments_are_tp() {
        for seed in 0..5 {
            let a = hankel_from_sequence(&moment_spec(4, seed, 6).unwrap()).unwrap();
            assert!(is_tp(&a).unwrap().holds);
            assert!(is_tp_hankel(&a).unwrap().holds);
        }
    }
}
