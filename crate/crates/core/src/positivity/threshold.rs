//! Rigorous rational brackets for `4 cos^2(pi / (n + 1))`.
//!
//! `pi` comes from Machin's formula `16 atan(1/5) - 4 atan(1/239)` and the
//! cosine from its Taylor series; both are alternating series with
//! decreasing terms, so consecutive partial sums bracket the true value.
//! Intermediate brackets are rounded outward to dyadic rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational};

/// Precision used when none is requested.
pub const DEFAULT_THRESHOLD_BITS: u32 = 128;

/// `lower <= 4 cos^2(pi / (n + 1)) <= upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tp2cThreshold {
    pub n: usize,
    pub precision_bits: u32,
    pub lower: Rational,
    pub upper: Rational,
}

impl Tp2cThreshold {
    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    /// Whether `c` is certified to be at least the threshold.
    pub fn certifies(&self, c: &Rational) -> bool {
        c >= &self.upper
    }
}

fn two_pow(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

fn round_down(x: &Rational, bits: u32) -> Rational {
    let scale = two_pow(bits);
    let scaled = x * Rational::from_integer(scale.clone());
    Rational::new(scaled.floor().to_integer(), scale)
}

fn round_up(x: &Rational, bits: u32) -> Rational {
    let scale = two_pow(bits);
    let scaled = x * Rational::from_integer(scale.clone());
    Rational::new(scaled.ceil().to_integer(), scale)
}

/// Bracket of an alternating series given its (eventually decreasing) terms:
/// stops once the next term drops below `eps`.
fn alternating_bracket(mut term: impl FnMut(usize) -> Rational, eps: &Rational, min_terms: usize) -> (Rational, Rational) {
    let mut sum = Rational::zero();
    let mut j = 0;
    loop {
        let t = term(j);
        let signed = if j.is_even() { t.clone() } else { -t.clone() };
        sum += signed;
        let next = term(j + 1);
        if j + 1 >= min_terms && &next < eps {
            let other = if (j + 1).is_even() { &sum + &next } else { &sum - &next };
            return if sum <= other { (sum, other) } else { (other, sum) };
        }
        j += 1;
    }
}

fn atan_inv(x: i64, bits: u32) -> (Rational, Rational) {
    let eps = Rational::new(BigInt::one(), two_pow(bits));
    let x2 = int(x * x);
    alternating_bracket(
        |j| {
            let mut p = Rational::from_integer(BigInt::from(x));
            for _ in 0..j {
                p *= &x2;
            }
            Rational::one() / (p * int(2 * j as i64 + 1))
        },
        &eps,
        1,
    )
}

/// Rational bracket of `pi` with width about `2^-bits`.
pub fn pi_bracket(bits: u32) -> (Rational, Rational) {
    let (a5_lo, a5_hi) = atan_inv(5, bits + 8);
    let (a239_lo, a239_hi) = atan_inv(239, bits + 8);
    let lo = int(16) * a5_lo - int(4) * a239_hi;
    let hi = int(16) * a5_hi - int(4) * a239_lo;
    (round_down(&lo, bits + 4), round_up(&hi, bits + 4))
}

/// Bracket of `cos(x)` for `0 <= x < 2` (a single point, not an interval).
fn cos_bracket(x: &Rational, bits: u32) -> (Rational, Rational) {
    let eps = Rational::new(BigInt::one(), two_pow(bits));
    let x2 = x * x;
    alternating_bracket(
        |j| {
            let mut t = Rational::one();
            for m in 1..=j {
                t *= &x2;
                t /= int(((2 * m - 1) * (2 * m)) as i64);
            }
            t
        },
        &eps,
        // terms decrease from here on whenever x < 2
        2,
    )
}

/// Bracket for `4 cos^2(pi / (n + 1))` with outward rounding to `2^-precision_bits`.
pub fn tp2c_threshold(n: usize, precision_bits: u32) -> Tp2cThreshold {
    assert!(n >= 1, "threshold needs n >= 1");
    let work = precision_bits + 32;
    let (pi_lo, pi_hi) = pi_bracket(work);
    let denom = int(n as i64 + 1);
    let theta_lo = round_down(&(pi_lo / &denom), work);
    let theta_hi = round_up(&(pi_hi / &denom), work);
    // cos is decreasing on [0, pi]
    let (cos_lo, _) = cos_bracket(&theta_hi, work);
    let (_, cos_hi) = cos_bracket(&theta_lo, work);
    let four = int(4);
    let (sq_lo, sq_hi) = if !cos_lo.is_negative() {
        (&cos_lo * &cos_lo, &cos_hi * &cos_hi)
    } else if !cos_hi.is_positive() {
        (&cos_hi * &cos_hi, &cos_lo * &cos_lo)
    } else {
        let a = &cos_lo * &cos_lo;
        let b = &cos_hi * &cos_hi;
        (Rational::zero(), if a > b { a } else { b })
    };
    Tp2cThreshold {
        n,
        precision_bits,
        lower: round_down(&(&four * sq_lo), precision_bits),
        upper: round_up(&(&four * sq_hi), precision_bits),
    }
}
