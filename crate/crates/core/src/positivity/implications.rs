//! Executable checks of structural facts about compounds and condensations
//! of totally positive matrices.
//!
//! A check whose hypothesis does not hold on the given input reports
//! [`Status::HypothesisNotMet`]; only a met hypothesis with a failed
//! conclusion is a [`Status::Fail`].

use num_traits::{One, Zero};

use super::{is_tp, is_tp_k, PositivityVerdict};
use crate::compound::compound;
use crate::condensation::condense;
use crate::determinant::determinant;
use crate::error::{Result, TpError};
use crate::matrix::{ExactMatrix, IndexSet};
use crate::report::Status;
use crate::rational::Rational;

/// `A` is `TP_{k+2}` hence `C_k(A)` must fail `TP_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompoundTp3Check {
    pub k: usize,
    pub hypothesis: PositivityVerdict,
    pub compound: ExactMatrix,
    pub compound_tp3: PositivityVerdict,
    pub compound_tp2: PositivityVerdict,
}

impl CompoundTp3Check {
    pub fn status(&self) -> Status {
        if !self.hypothesis.holds {
            Status::HypothesisNotMet
        } else if self.compound_tp3.holds {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    /// Contrapositive direction: a `TP_3` compound would rule out `TP_{k+2}`.
    pub fn contrapositive_consistent(&self) -> bool {
        !(self.compound_tp3.holds && self.hypothesis.holds)
    }
}

/// For `n >= 4` and `2 <= k <= n - 2`: requires `A` to be `TP_{k+2}` (else
/// [`TpError::Hypothesis`]) and evaluates `TP_3` and `TP_2` of `C_k(A)`.
pub fn check_compound_not_tp3(a: &ExactMatrix, k: usize) -> Result<CompoundTp3Check> {
    if !a.is_square() {
        return Err(TpError::Shape("expected a square matrix".into()));
    }
    let n = a.rows();
    if n < 4 || k < 2 || k > n - 2 {
        return Err(TpError::InvalidOrder(format!(
            "need n >= 4 and 2 <= k <= n-2, got n={n}, k={k}"
        )));
    }
    let hypothesis = is_tp_k(a, k + 2)?;
    if !hypothesis.holds {
        return Err(TpError::Hypothesis(format!("matrix is not TP_{}", k + 2)));
    }
    let c = compound(a, k)?;
    Ok(CompoundTp3Check {
        k,
        hypothesis,
        compound_tp3: is_tp_k(&c, 3)?,
        compound_tp2: is_tp_k(&c, 2)?,
        compound: c,
    })
}

/// One "hypothesis implies conclusion" instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Implication {
    pub label: String,
    pub hypothesis_met: bool,
    /// Evaluated only when the hypothesis is met.
    pub conclusion: Option<PositivityVerdict>,
}

impl Implication {
    pub fn violated(&self) -> bool {
        self.hypothesis_met && self.conclusion.as_ref().is_some_and(|c| !c.holds)
    }
}

fn combine(items: &[Implication]) -> Status {
    if items.iter().any(Implication::violated) {
        Status::Fail
    } else if items.iter().any(|i| i.hypothesis_met) {
        Status::Pass
    } else {
        Status::HypothesisNotMet
    }
}

/// `TP_{k+2} => D_k TP_2` and `TP_{k+3} => D_k TP_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensationInheritCheck {
    pub k: usize,
    pub condensed: ExactMatrix,
    pub implications: Vec<Implication>,
    /// `TP_4` of `D_k(A)` when its order allows; informational only.
    pub tp4_of_condensed: Option<PositivityVerdict>,
}

impl CondensationInheritCheck {
    pub fn status(&self) -> Status {
        combine(&self.implications)
    }
}

pub fn check_condensation_inherits(a: &ExactMatrix, k: usize) -> Result<CondensationInheritCheck> {
    if !a.is_square() {
        return Err(TpError::Shape("expected a square matrix".into()));
    }
    let n = a.rows();
    if k == 0 || k >= n {
        return Err(TpError::InvalidOrder(format!("need 1 <= k <= n-1, got n={n}, k={k}")));
    }
    let d = condense(a, k)?;
    let mut implications = Vec::new();
    for extra in [2usize, 3] {
        let label = format!("TP_{} => D_{k} is TP_{extra}", k + extra);
        if k + extra > n {
            implications.push(Implication {
                label,
                hypothesis_met: false,
                conclusion: None,
            });
            continue;
        }
        let met = is_tp_k(a, k + extra)?.holds;
        let conclusion = if met { Some(is_tp_k(&d, extra)?) } else { None };
        implications.push(Implication {
            label,
            hypothesis_met: met,
            conclusion,
        });
    }
    let tp4_of_condensed = if d.rows() >= 4 { Some(is_tp_k(&d, 4)?) } else { None };
    Ok(CondensationInheritCheck {
        k,
        condensed: d,
        implications,
        tp4_of_condensed,
    })
}

/// `A` `TP_k` and `D_k(A)` `TP_2` imply `A` `TP_{k+2}`; same with `C_{k+1}(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensationLiftCheck {
    pub k: usize,
    pub via_condensation: Implication,
    pub via_compound: Implication,
}

impl CondensationLiftCheck {
    pub fn status(&self) -> Status {
        combine(&[self.via_condensation.clone(), self.via_compound.clone()])
    }
}

pub fn check_condensation_lifts(a: &ExactMatrix, k: usize) -> Result<CondensationLiftCheck> {
    if !a.is_square() {
        return Err(TpError::Shape("expected a square matrix".into()));
    }
    let n = a.rows();
    if k == 0 || k + 2 > n {
        return Err(TpError::InvalidOrder(format!("need 1 <= k <= n-2, got n={n}, k={k}")));
    }
    let base = is_tp_k(a, k)?.holds;
    let conclusion = || is_tp_k(a, k + 2);
    let d_tp2 = base && is_tp_k(&condense(a, k)?, 2)?.holds;
    let c_tp2 = base && is_tp_k(&compound(a, k + 1)?, 2)?.holds;
    let via_condensation = Implication {
        label: format!("TP_{k} and D_{k} TP_2 => TP_{}", k + 2),
        hypothesis_met: d_tp2,
        conclusion: if d_tp2 { Some(conclusion()?) } else { None },
    };
    let via_compound = Implication {
        label: format!("TP_{k} and C_{} TP_2 => TP_{}", k + 1, k + 2),
        hypothesis_met: c_tp2,
        conclusion: if c_tp2 { Some(conclusion()?) } else { None },
    };
    Ok(CondensationLiftCheck {
        k,
        via_condensation,
        via_compound,
    })
}

/// `B = A - t E_{1,1}` with `t = det A / det A({1})`, which makes `B` singular.
///
/// Requires `A` square of order `>= 2` and totally positive.
pub fn singular_perturbation(a: &ExactMatrix) -> Result<ExactMatrix> {
    if !a.is_square() || a.rows() < 2 {
        return Err(TpError::Shape("expected a square matrix of order >= 2".into()));
    }
    let n = a.rows();
    if !is_tp(a)?.holds {
        return Err(TpError::Hypothesis("matrix is not totally positive".into()));
    }
    let tail = IndexSet::range(2, n, n)?;
    let t = determinant(a)? / crate::determinant::minor(a, &tail, &tail)?;
    let mut b = a.clone();
    b.set(1, 1, a.get(1, 1) - t);
    Ok(b)
}

/// `B` is `TP_{n-1}`, singular, not `TP_n`, and `D_{n-3}(B)` is `TP_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationCheck {
    pub perturbed: ExactMatrix,
    pub det: Rational,
    pub tp_n_minus_1: PositivityVerdict,
    pub tp_n: PositivityVerdict,
    pub condensed_tp3: PositivityVerdict,
}

impl PerturbationCheck {
    pub fn status(&self) -> Status {
        if self.det.is_zero() && self.tp_n_minus_1.holds && !self.tp_n.holds && self.condensed_tp3.holds {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Runs [`singular_perturbation`] on a TP matrix of order `n >= 4` and checks
/// the resulting `B` (with `k = n - 3`).
pub fn check_singular_perturbation(a: &ExactMatrix) -> Result<PerturbationCheck> {
    if a.rows() < 4 {
        return Err(TpError::InvalidOrder("perturbation check needs order >= 4".into()));
    }
    let n = a.rows();
    let b = singular_perturbation(a)?;
    Ok(PerturbationCheck {
        det: determinant(&b)?,
        tp_n_minus_1: is_tp_k(&b, n - 1)?,
        tp_n: is_tp_k(&b, n)?,
        condensed_tp3: is_tp_k(&condense(&b, n - 3)?, 3)?,
        perturbed: b,
    })
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// `P` with `P[r, perm[r]] = 1`, so `(P S P^T)[r, c] = S[perm[r], perm[c]]`.
pub fn permutation_matrix(perm: &[usize]) -> ExactMatrix {
    let n = perm.len();
    ExactMatrix::from_fn(n, n, |r, c| {
        if perm[r - 1] + 1 == c {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
    .expect("nonempty permutation")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingCase {
    /// 0-based images, `perm[r]` is the original index placed at position `r`.
    pub perm: Vec<usize>,
    pub verdict: PositivityVerdict,
}

/// Simultaneous row/column reorderings of `S`: every one must fail `TP_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingInvarianceCheck {
    pub cases: Vec<OrderingCase>,
}

impl OrderingInvarianceCheck {
    pub fn status(&self) -> Status {
        if self.cases.iter().all(|c| !c.verdict.holds) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn failing_tp3(&self) -> usize {
        self.cases.iter().filter(|c| !c.verdict.holds).count()
    }
}

pub fn check_ordering_invariance(s: &ExactMatrix) -> Result<OrderingInvarianceCheck> {
    if !s.is_square() || s.rows() < 3 {
        return Err(TpError::Shape("expected a square matrix of order >= 3".into()));
    }
    let mut cases = Vec::new();
    for perm in permutations(s.rows()) {
        let p = permutation_matrix(&perm);
        let reordered = &(&p * s) * &p.transpose();
        cases.push(OrderingCase {
            verdict: is_tp_k(&reordered, 3)?,
            perm,
        });
    }
    Ok(OrderingInvarianceCheck { cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count_and_order() {
        let p = permutations(4);
        assert_eq!(p.len(), 24);
        assert_eq!(p[0], vec![0, 1, 2, 3]);
        assert_eq!(p[23], vec![3, 2, 1, 0]);
    }

    #[test]
    fn permutation_matrix_reindexes() {
        let s = ExactMatrix::from_i64(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]).unwrap();
        let perm = vec![2, 0, 1];
        let p = permutation_matrix(&perm);
        let r = &(&p * &s) * &p.transpose();
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(r.get(i, j), s.get(perm[i - 1] + 1, perm[j - 1] + 1));
            }
        }
    }

    #[test]
    fn lift_check_without_hypothesis() {
        let id = ExactMatrix::identity(4).unwrap();
        let c = check_condensation_lifts(&id, 1).unwrap();
        assert_eq!(c.status(), Status::HypothesisNotMet);
    }

    #[test]
    fn compound_check_rejects_non_tp() {
        let id = ExactMatrix::identity(4).unwrap();
        assert!(matches!(check_compound_not_tp3(&id, 2), Err(TpError::Hypothesis(_))));
        assert!(matches!(check_compound_not_tp3(&id, 3), Err(TpError::InvalidOrder(_))));
    }

    #[test]
    fn perturbation_rejects_non_tp() {
        let id = ExactMatrix::identity(4).unwrap();
        assert!(matches!(singular_perturbation(&id), Err(TpError::Hypothesis(_))));
    }
}
