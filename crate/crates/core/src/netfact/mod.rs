//! Bidiagonal factorization of nonsingular totally nonnegative matrices and
//! the planar networks that encode them.
//!
//! With `L_i(l) = I + l E[i, i-1]` and `U_j(u) = I + u E[j-1, j]`, a matrix is
//! written as
//!
//! ```text
//! A = G_1(l) G_2(l) ... G_{n-1}(l) * D * G_{n-1}(u)^T ... G_2(u)^T G_1(u)^T
//! G_g(x) = L_{g+1}(x_s) L_g(x_{s+1}) ... L_2(x_{s+g-1}),   s = 1 + g(g-1)/2
//! ```
//!
//! so `lowers` and `uppers` each hold `n(n-1)/2` parameters in that order.
//! Spelled out:
//!
//! ```text
//! n = 3:  L_2(l1) · L_3(l2) L_2(l3) · D · U_2(u3) U_3(u2) · U_2(u1)
//! n = 4:  L_2(l1) · L_3(l2) L_2(l3) · L_4(l4) L_3(l5) L_2(l6) · D
//!           · U_2(u6) U_3(u5) U_4(u4) · U_2(u3) U_3(u2) · U_2(u1)
//! ```
//!
//! All parameters nonnegative with a positive diagonal gives a nonsingular TN
//! matrix; all strictly positive gives a TP matrix.

mod generate;
mod network;
mod smatrix;

pub use generate::*;
pub use network::*;
pub use smatrix::*;

use num_traits::{One, Signed, Zero};

use crate::determinant::determinant;
use crate::error::{Result, TpError};
use crate::matrix::ExactMatrix;
use crate::positivity::is_tn_k;
use crate::rational::Rational;

/// Bidiagonal positions `g+1, g, ..., 2` for `g = 1..n-1`, concatenated.
pub fn factor_positions(n: usize) -> Vec<usize> {
    (1..n).flat_map(|g| (2..=g + 1).rev()).collect()
}

/// 0-based offset of group `g` inside `lowers`/`uppers`.
pub fn group_start(g: usize) -> usize {
    g * (g - 1) / 2
}

/// Parameters of the factorization; each `(i, v)` pairs a bidiagonal position with its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationParams {
    pub n: usize,
    pub lowers: Vec<(usize, Rational)>,
    pub uppers: Vec<(usize, Rational)>,
    pub diag: Vec<Rational>,
}

impl FactorizationParams {
    /// Pairs the values with [`factor_positions`] and validates.
    pub fn new(n: usize, lowers: Vec<Rational>, uppers: Vec<Rational>, diag: Vec<Rational>) -> Result<Self> {
        let pos = factor_positions(n);
        if lowers.len() != pos.len() || uppers.len() != pos.len() {
            return Err(TpError::Shape(format!(
                "order {n} needs {} lower and upper parameters, got {} and {}",
                pos.len(),
                lowers.len(),
                uppers.len()
            )));
        }
        let p = FactorizationParams {
            n,
            lowers: pos.iter().copied().zip(lowers).collect(),
            uppers: pos.iter().copied().zip(uppers).collect(),
            diag,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Err(TpError::InvalidOrder("order must be positive".into()));
        }
        if self.diag.len() != n {
            return Err(TpError::Shape(format!("need {n} diagonal entries, got {}", self.diag.len())));
        }
        let pos = factor_positions(n);
        for (name, list) in [("lower", &self.lowers), ("upper", &self.uppers)] {
            if list.len() != pos.len() {
                return Err(TpError::Shape(format!(
                    "need {} {name} parameters, got {}",
                    pos.len(),
                    list.len()
                )));
            }
            for (t, ((i, v), want)) in list.iter().zip(&pos).enumerate() {
                if i != want {
                    return Err(TpError::InvalidIndex(format!(
                        "{name} parameter {} sits at position {i}, expected {want}",
                        t + 1
                    )));
                }
                if v.is_negative() {
                    return Err(TpError::Domain(format!("{name} parameter {} is negative", t + 1)));
                }
            }
        }
        if let Some(d) = self.diag.iter().find(|d| !d.is_positive()) {
            return Err(TpError::Domain(format!("diagonal entry {d} is not positive")));
        }
        Ok(())
    }

    pub fn lower_values(&self) -> Vec<Rational> {
        self.lowers.iter().map(|(_, v)| v.clone()).collect()
    }

    pub fn upper_values(&self) -> Vec<Rational> {
        self.uppers.iter().map(|(_, v)| v.clone()).collect()
    }

    pub fn all_positive(&self) -> bool {
        self.lowers.iter().chain(&self.uppers).all(|(_, v)| v.is_positive())
    }
}

pub fn elementary_lower(n: usize, i: usize, v: Rational) -> Result<ExactMatrix> {
    if i < 2 || i > n {
        return Err(TpError::InvalidIndex(format!("lower position {i} outside 2..={n}")));
    }
    let mut m = ExactMatrix::identity(n)?;
    m.set(i, i - 1, v);
    Ok(m)
}

pub fn elementary_upper(n: usize, j: usize, v: Rational) -> Result<ExactMatrix> {
    if j < 2 || j > n {
        return Err(TpError::InvalidIndex(format!("upper position {j} outside 2..={n}")));
    }
    let mut m = ExactMatrix::identity(n)?;
    m.set(j - 1, j, v);
    Ok(m)
}

/// `G_1(x) ... G_{n-1}(x)` as a unit lower triangular matrix.
fn lower_product(n: usize, factors: &[(usize, Rational)]) -> ExactMatrix {
    let mut m = ExactMatrix::identity(n).expect("positive order");
    for (i, v) in factors {
        if v.is_zero() {
            continue;
        }
        // right-multiplying by L_i(v) adds v * column i to column i-1
        for r in 1..=n {
            let add = m.get(r, *i) * v;
            if !add.is_zero() {
                let cur = m.get(r, i - 1) + add;
                m.set(r, i - 1, cur);
            }
        }
    }
    m
}

/// The exact product encoded by `params`.
pub fn assemble(params: &FactorizationParams) -> Result<ExactMatrix> {
    params.validate()?;
    let n = params.n;
    let lower = lower_product(n, &params.lowers);
    let upper = lower_product(n, &params.uppers).transpose();
    let d = ExactMatrix::diagonal(&params.diag)?;
    Ok(&(&lower * &d) * &upper)
}

/// Neville elimination of a unit lower triangular TN matrix, returning the
/// parameters of `G_1 ... G_{n-1}` in factor order.
///
/// Elimination runs on `J L^T J` (`J` the reversal). That map reverses
/// products and sends `L_i` to `L_{n+2-i}`, turning the Neville form
/// `(L_n ... L_2)(L_n ... L_3) ... (L_n)` into the `G_1 ... G_{n-1}` order.
#[allow(clippy::needless_range_loop)]
fn lower_parameters(l: &ExactMatrix) -> Result<Vec<Rational>> {
    let n = l.rows();
    let mut w = ExactMatrix::from_fn(n, n, |i, j| l.get(n + 1 - j, n + 1 - i).clone())?;
    // multipliers[j][i]: eliminating (i, j) with row i-1
    let mut multipliers = vec![vec![Rational::zero(); n + 1]; n + 1];
    for j in 1..n {
        for i in (j + 1..=n).rev() {
            let target = w.get(i, j).clone();
            if target.is_zero() {
                continue;
            }
            let pivot = w.get(i - 1, j).clone();
            if pivot.is_zero() {
                return Err(TpError::Consistency(format!(
                    "zero pivot above nonzero entry ({i},{j}) during Neville elimination"
                )));
            }
            let m = &target / &pivot;
            if m.is_negative() {
                return Err(TpError::Consistency(format!(
                    "negative Neville multiplier at ({i},{j})"
                )));
            }
            for c in 1..=n {
                let v = w.get(i, c) - &m * w.get(i - 1, c);
                w.set(i, c, v);
            }
            multipliers[j][i] = m;
        }
    }
    if w != ExactMatrix::identity(n)? {
        return Err(TpError::Consistency("Neville elimination did not reach the identity".into()));
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for g in 1..n {
        let j = n - g;
        for t in 0..g {
            out.push(multipliers[j][j + 1 + t].clone());
        }
    }
    Ok(out)
}

/// Exact `A = L D U` without pivoting; `None` when a pivot vanishes.
fn ldu(a: &ExactMatrix) -> Option<(ExactMatrix, Vec<Rational>, ExactMatrix)> {
    let n = a.rows();
    let mut w = a.clone();
    let mut l = ExactMatrix::identity(n).ok()?;
    let mut pivots = Vec::with_capacity(n);
    for c in 1..=n {
        let p = w.get(c, c).clone();
        if p.is_zero() {
            return None;
        }
        for r in c + 1..=n {
            let f = w.get(r, c) / &p;
            if f.is_zero() {
                continue;
            }
            for q in c..=n {
                let v = w.get(r, q) - &f * w.get(c, q);
                w.set(r, q, v);
            }
            l.set(r, c, f);
        }
        pivots.push(p);
    }
    let u = ExactMatrix::from_fn(n, n, |i, j| {
        if j < i {
            Rational::zero()
        } else {
            w.get(i, j) / &pivots[i - 1]
        }
    })
    .ok()?;
    Some((l, pivots, u))
}

/// Bidiagonal parameters of a nonsingular TN matrix.
pub fn factorize(a: &ExactMatrix) -> Result<FactorizationParams> {
    if !a.is_square() {
        return Err(TpError::Shape("factorization needs a square matrix".into()));
    }
    let n = a.rows();
    if determinant(a)?.is_zero() {
        return Err(TpError::Domain("matrix is singular".into()));
    }
    let tn = is_tn_k(a, n)?;
    if !tn.holds {
        return Err(TpError::Domain("matrix is not totally nonnegative".into()));
    }
    let (l, d, u) = ldu(a).ok_or_else(|| {
        TpError::Consistency("zero pivot in LDU of a nonsingular TN matrix".into())
    })?;
    if d.iter().any(|v| !v.is_positive()) {
        return Err(TpError::Consistency("non-positive pivot in LDU".into()));
    }
    let lowers = lower_parameters(&l)?;
    let uppers = lower_parameters(&u.transpose())?;
    let params = FactorizationParams::new(n, lowers, uppers, d)?;
    debug_assert_eq!(&assemble(&params)?, a);
    Ok(params)
}

/// Convenience: every parameter set to `v` and `D = I`.
pub fn constant_params(n: usize, v: Rational) -> FactorizationParams {
    let k = n * (n - 1) / 2;
    FactorizationParams::new(n, vec![v.clone(); k], vec![v; k], vec![Rational::one(); n])
        .expect("constant nonnegative parameters are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positivity::is_tp;
    use crate::rational::int;

    #[test]
    fn positions_follow_group_pattern() {
        assert_eq!(factor_positions(3), vec![2, 3, 2]);
        assert_eq!(factor_positions(4), vec![2, 3, 2, 4, 3, 2]);
        assert!(factor_positions(1).is_empty());
    }

    #[test]
    fn elementary_factors() {
        assert_eq!(
            elementary_lower(2, 2, int(1)).unwrap(),
            ExactMatrix::from_i64(&[[1, 0], [1, 1]]).unwrap()
        );
        assert_eq!(
            elementary_upper(2, 2, int(1)).unwrap(),
            ExactMatrix::from_i64(&[[1, 1], [0, 1]]).unwrap()
        );
        let l = elementary_lower(3, 3, int(5)).unwrap();
        assert_eq!(l.get(3, 2), &int(5));
        assert!(matches!(elementary_lower(3, 1, int(1)), Err(TpError::InvalidIndex(_))));
        assert!(matches!(elementary_upper(3, 4, int(1)), Err(TpError::InvalidIndex(_))));
    }

    #[test]
    fn assemble_small_cases() {
        let p = FactorizationParams::new(2, vec![int(1)], vec![int(1)], vec![int(1), int(1)]).unwrap();
        assert_eq!(assemble(&p).unwrap(), ExactMatrix::from_i64(&[[1, 1], [1, 2]]).unwrap());
        let z = FactorizationParams::new(3, vec![int(0); 3], vec![int(0); 3], vec![int(2), int(3), int(4)]).unwrap();
        assert_eq!(
            assemble(&z).unwrap(),
            ExactMatrix::diagonal(&[int(2), int(3), int(4)]).unwrap()
        );
    }

    #[test]
    fn assemble_matches_explicit_product() {
        // n = 3 written out factor by factor
        let lv = [int(2), int(3), int(5)];
        let uv = [int(7), int(11), int(13)];
        let d = [int(1), int(2), int(3)];
        let p = FactorizationParams::new(3, lv.to_vec(), uv.to_vec(), d.to_vec()).unwrap();
        let f = |m: Result<ExactMatrix>| m.unwrap();
        let mut expect = f(elementary_lower(3, 2, lv[0].clone()));
        for m in [
            f(elementary_lower(3, 3, lv[1].clone())),
            f(elementary_lower(3, 2, lv[2].clone())),
            f(ExactMatrix::diagonal(&d)),
            f(elementary_upper(3, 2, uv[2].clone())),
            f(elementary_upper(3, 3, uv[1].clone())),
            f(elementary_upper(3, 2, uv[0].clone())),
        ] {
            expect = &expect * &m;
        }
        assert_eq!(assemble(&p).unwrap(), expect);
    }

    #[test]
    fn all_ones_is_tp() {
        let a = assemble(&constant_params(4, int(1))).unwrap();
        assert!(is_tp(&a).unwrap().holds);
    }

    #[test]
    fn factorize_inverts_small_cases() {
        let a = ExactMatrix::from_i64(&[[1, 1], [1, 2]]).unwrap();
        let p = factorize(&a).unwrap();
        assert_eq!(p.lower_values(), vec![int(1)]);
        assert_eq!(p.upper_values(), vec![int(1)]);
        assert_eq!(p.diag, vec![int(1), int(1)]);
        let d = ExactMatrix::diagonal(&[int(2), int(3), int(4)]).unwrap();
        let q = factorize(&d).unwrap();
        assert!(q.lower_values().iter().chain(&q.upper_values()).all(Zero::is_zero));
        assert_eq!(q.diag, vec![int(2), int(3), int(4)]);
    }

    #[test]
    fn factorize_recovers_parameters() {
        let lv: Vec<Rational> = (1..=6).map(int).collect();
        let uv: Vec<Rational> = (7..=12).map(int).collect();
        let p = FactorizationParams::new(4, lv, uv, vec![int(1), int(2), int(3), int(4)]).unwrap();
        let a = assemble(&p).unwrap();
        assert_eq!(factorize(&a).unwrap(), p);
    }

    #[test]
    fn factorize_rejects_bad_input() {
        let sing = ExactMatrix::from_i64(&[[1, 1], [1, 1]]).unwrap();
        assert!(matches!(factorize(&sing), Err(TpError::Domain(_))));
        let neg = ExactMatrix::from_i64(&[[1, 2], [3, 1]]).unwrap();
        assert!(matches!(factorize(&neg), Err(TpError::Domain(_))));
    }

    #[test]
    fn validation() {
        assert!(FactorizationParams::new(3, vec![int(1); 2], vec![int(1); 3], vec![int(1); 3]).is_err());
        assert!(FactorizationParams::new(2, vec![int(-1)], vec![int(1)], vec![int(1); 2]).is_err());
        assert!(FactorizationParams::new(2, vec![int(1)], vec![int(1)], vec![int(1), int(0)]).is_err());
    }
}
