//! Exact rational scalars.
//!
//! Entries are `num_rational::BigRational`, which keeps every value in lowest
//! terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, TpError};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace tolerated, `q > 0`).
///
/// Errors carry a 1-based column offset relative to the start of `s`; callers
/// that know the line shift it into place.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let err = |col: usize, msg: &str| TpError::Parse {
        line: 1,
        column: col,
        message: format!("{msg} in {t:?}"),
    };
    if t.is_empty() {
        return Err(err(lead + 1, "empty rational"));
    }
    let (num, den, den_col) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim()), lead + p.len() + 2),
        None => (t, None, 0),
    };
    let parse_int = |x: &str, col: usize| -> Result<BigInt> {
        let ok = !x.is_empty()
            && x.strip_prefix(['-', '+']).unwrap_or(x).chars().all(|c| c.is_ascii_digit())
            && x.strip_prefix(['-', '+']).is_none_or(|r| !r.is_empty());
        if !ok {
            return Err(err(col, "malformed integer"));
        }
        x.parse::<BigInt>().map_err(|_| err(col, "malformed integer"))
    };
    let p = parse_int(num, lead + 1)?;
    let q = match den {
        Some(d) => {
            let q = parse_int(d, den_col)?;
            if q.is_zero() {
                return Err(err(den_col, "zero denominator"));
            }
            if q.is_negative() {
                return Err(err(den_col, "negative denominator"));
            }
            q
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(p, q))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational(" -3/6 ").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("+4/2").unwrap(), int(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_rational("1/0"), Err(TpError::Parse { .. })));
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("-").is_err());
        assert!(parse_rational("1/").is_err());
    }

    #[test]
    fn zero_denominator_column_points_at_denominator() {
        match parse_rational("12/0") {
            Err(TpError::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn canonical_format() {
        assert_eq!(format_rational(&ratio(2, 4)), "1/2");
        assert_eq!(format_rational(&ratio(-6, 3)), "-2");
        assert_eq!(format_rational(&int(0)), "0");
    }
}
