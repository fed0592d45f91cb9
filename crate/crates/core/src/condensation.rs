//! Dodgson condensation and Sylvester's determinantal identity.
//!
//! `D_k(A)` holds the contiguous minors of order `k + 1`. It is built from
//! `D_{k-1}` and `D_{k-2}` by the 2x2 rule
//!
//! ```text
//! M(k)[i,j] = (M(k-1)[i,j] M(k-1)[i+1,j+1] - M(k-1)[i,j+1] M(k-1)[i+1,j]) / M(k-2)[i+1,j+1]
//! ```
//!
//! with `D_0 = A` and `D_{-1}` all ones. The recursion runs on the integer
//! matrix `L * A` (`L` the LCM of all denominators) so every division can be
//! checked for exactness; results are scaled back by `L^(k+1)`.
//!
//! When a divisor is zero the entry is computed directly as a contiguous
//! minor and its position recorded in the stage's fallback list.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::determinant::{bareiss, determinant, minor};
use crate::error::{Result, TpError};
use crate::matrix::{ExactMatrix, IndexSet};
use crate::rational::{lcm_of_denominators, Rational};

/// `D_1(A), ..., D_{n-1}(A)` plus the entries that needed the direct-minor fallback.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensationSequence {
    pub source: ExactMatrix,
    /// `stages[k - 1]` is `D_k(A)`, of order `n - k`.
    pub stages: Vec<ExactMatrix>,
    /// `fallbacks[k - 1]` lists 1-based `(i, j)` entries of `D_k(A)` that were
    /// computed directly because their divisor vanished.
    pub fallbacks: Vec<Vec<(usize, usize)>>,
}

impl CondensationSequence {
    pub fn stage(&self, k: usize) -> &ExactMatrix {
        &self.stages[k - 1]
    }

    pub fn determinant(&self) -> &Rational {
        self.stages.last().expect("at least one stage").get(1, 1)
    }

    pub fn used_fallback(&self) -> bool {
        self.fallbacks.iter().any(|f| !f.is_empty())
    }
}

struct IntGrid {
    n: usize,
    data: Vec<BigInt>,
}

impl IntGrid {
    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[(i - 1) * self.n + (j - 1)]
    }
}

fn contiguous_int_minor(a: &IntGrid, i: usize, j: usize, size: usize) -> Result<BigInt> {
    let mut block = Vec::with_capacity(size * size);
    for r in i..i + size {
        for c in j..j + size {
            block.push(a.at(r, c).clone());
        }
    }
    bareiss(size, block)
}

fn run(a: &ExactMatrix, upto: usize) -> Result<CondensationSequence> {
    if !a.is_square() {
        return Err(TpError::Shape(format!(
            "condensation needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if upto == 0 || upto >= n {
        return Err(TpError::InvalidOrder(format!(
            "condensation order {upto} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    let lift = lcm_of_denominators(a.entries());
    let base = IntGrid {
        n,
        data: a.entries().iter().map(|v| v.numer() * (&lift / v.denom())).collect(),
    };
    let mut older = IntGrid {
        n: n + 1,
        data: vec![BigInt::one(); (n + 1) * (n + 1)],
    };
    let mut prev = IntGrid {
        n,
        data: base.data.clone(),
    };
    let mut stages = Vec::with_capacity(upto);
    let mut fallbacks = Vec::with_capacity(upto);
    let mut scale = lift.clone();
    for k in 1..=upto {
        let size = n - k;
        let mut data = Vec::with_capacity(size * size);
        let mut flagged = Vec::new();
        for i in 1..=size {
            for j in 1..=size {
                let divisor = older.at(i + 1, j + 1);
                let value = if divisor.is_zero() {
                    flagged.push((i, j));
                    contiguous_int_minor(&base, i, j, k + 1)?
                } else {
                    let num = prev.at(i, j) * prev.at(i + 1, j + 1) - prev.at(i, j + 1) * prev.at(i + 1, j);
                    let (q, r) = num.div_rem(divisor);
                    if !r.is_zero() {
                        return Err(TpError::Consistency(format!(
                            "inexact condensation division at stage {k}, entry ({i},{j})"
                        )));
                    }
                    q
                };
                data.push(value);
            }
        }
        scale *= &lift;
        let stage = ExactMatrix::new(
            size,
            size,
            data.iter().map(|v| Rational::new(v.clone(), scale.clone())).collect(),
        )?;
        stages.push(stage);
        fallbacks.push(flagged);
        older = std::mem::replace(&mut prev, IntGrid { n: size, data });
    }
    Ok(CondensationSequence {
        source: a.clone(),
        stages,
        fallbacks,
    })
}

/// `D_k(A)` for `1 <= k <= n - 1`.
pub fn condense(a: &ExactMatrix, k: usize) -> Result<ExactMatrix> {
    Ok(run(a, k)?.stages.pop().expect("k >= 1 stages"))
}

/// `D_k(A)` together with the fallback positions of that stage.
pub fn condense_with_provenance(a: &ExactMatrix, k: usize) -> Result<(ExactMatrix, Vec<(usize, usize)>)> {
    let mut seq = run(a, k)?;
    Ok((
        seq.stages.pop().expect("k >= 1 stages"),
        seq.fallbacks.pop().expect("k >= 1 stages"),
    ))
}

/// The full sequence down to the `1x1` determinant.
pub fn condensation_sequence(a: &ExactMatrix) -> Result<CondensationSequence> {
    if a.is_square() && a.rows() < 2 {
        return Err(TpError::InvalidOrder("condensation needs order >= 2".into()));
    }
    run(a, a.rows().saturating_sub(1).max(1))
}

/// Both sides of Sylvester's identity and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterOutcome {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

/// The bordered-minor matrix `B = (det A[α ∪ {i}, α ∪ {j}])` for `i, j` in `α^c`,
/// rows and columns in increasing label order.
pub fn bordered_minor_matrix(a: &ExactMatrix, alpha: &IndexSet) -> Result<ExactMatrix> {
    let rest = alpha.complement();
    if rest.is_empty() {
        return Err(TpError::InvalidIndex("alpha leaves no complement".into()));
    }
    let mut data = Vec::with_capacity(rest.len() * rest.len());
    for &i in rest.indices() {
        let rows = alpha.union(&IndexSet::new(vec![i], alpha.bound())?)?;
        for &j in rest.indices() {
            let cols = alpha.union(&IndexSet::new(vec![j], alpha.bound())?)?;
            data.push(minor(a, &rows, &cols)?);
        }
    }
    ExactMatrix::new(rest.len(), rest.len(), data)
}

/// Evaluates `det B[δ, γ]` and `(det A[α])^(l-1) det A[α ∪ δ, α ∪ γ]`.
pub fn sylvester_check(
    a: &ExactMatrix,
    alpha: &IndexSet,
    delta: &IndexSet,
    gamma: &IndexSet,
) -> Result<SylvesterOutcome> {
    if !a.is_square() {
        return Err(TpError::Shape("Sylvester's identity needs a square matrix".into()));
    }
    let n = a.rows();
    for (name, s) in [("alpha", alpha), ("delta", delta), ("gamma", gamma)] {
        if s.bound() != n {
            return Err(TpError::InvalidIndex(format!(
                "{name} has bound {}, matrix order is {n}",
                s.bound()
            )));
        }
    }
    if !delta.is_disjoint(alpha) || !gamma.is_disjoint(alpha) {
        return Err(TpError::InvalidIndex(
            "delta and gamma must lie in the complement of alpha".into(),
        ));
    }
    if delta.len() != gamma.len() || delta.is_empty() {
        return Err(TpError::Shape(format!(
            "delta and gamma need equal positive size, got {} and {}",
            delta.len(),
            gamma.len()
        )));
    }
    let b = bordered_minor_matrix(a, alpha)?;
    let rest = alpha.complement();
    let position = |s: &IndexSet| -> Result<IndexSet> {
        let pos = s
            .indices()
            .iter()
            .map(|v| rest.indices().binary_search(v).map(|p| p + 1).expect("checked disjoint"))
            .collect();
        IndexSet::new(pos, rest.len())
    };
    let lhs = minor(&b, &position(delta)?, &position(gamma)?)?;
    let base = if alpha.is_empty() {
        Rational::one()
    } else {
        minor(a, alpha, alpha)?
    };
    let mut rhs = minor(a, &alpha.union(delta)?, &alpha.union(gamma)?)?;
    for _ in 1..delta.len() {
        rhs *= &base;
    }
    Ok(SylvesterOutcome {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// The partitioned special case: with `A22` the interior block and the four
/// corner `(n-1)`-minors `b, c, d, e`, checks `det [[b, c], [d, e]] = det A22 * det A`.
pub fn corner_minor_check(a: &ExactMatrix) -> Result<SylvesterOutcome> {
    if !a.is_square() || a.rows() < 3 {
        return Err(TpError::Shape("corner-minor identity needs a square matrix of order >= 3".into()));
    }
    let n = a.rows();
    let head = IndexSet::range(1, n - 1, n)?;
    let tail = IndexSet::range(2, n, n)?;
    let inner = IndexSet::range(2, n - 1, n)?;
    let b = minor(a, &head, &head)?;
    let c = minor(a, &head, &tail)?;
    let d = minor(a, &tail, &head)?;
    let e = minor(a, &tail, &tail)?;
    let lhs = &b * &e - &c * &d;
    let rhs = minor(a, &inner, &inner)? * determinant(a)?;
    Ok(SylvesterOutcome {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}
