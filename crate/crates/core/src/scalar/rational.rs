//! Parsing and rendering of exact rationals.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

fn bad(s: &str) -> Error {
    Error::InvalidArgument(format!("not a rational literal: `{s}`"))
}

/// Parses `p`, `p/q`, decimals such as `-0.25`, and exponents such as `1.5e-3`.
/// A leading Unicode minus sign is accepted.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim().replace('\u{2212}', "-");
    if t.is_empty() {
        return Err(bad(s));
    }
    if let Some((p, q)) = t.split_once('/') {
        let p = parse_decimal(p.trim()).ok_or_else(|| bad(s))?;
        let q = parse_decimal(q.trim()).ok_or_else(|| bad(s))?;
        if q.is_zero() {
            return Err(Error::InvalidArgument(format!("zero denominator in `{s}`")));
        }
        return Ok(p / q);
    }
    parse_decimal(&t).ok_or_else(|| bad(s))
}

fn parse_decimal(t: &str) -> Option<BigRational> {
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i64>().ok()?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let n = BigInt::from_str_radix(if digits.is_empty() { "0" } else { &digits }, 10).ok()?;
    let scale = exp - frac.len() as i64;
    if scale.unsigned_abs() > 100_000 {
        return None;
    }
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        BigRational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(n, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        q = -q;
    }
    Some(q)
}

/// `p/q`, or `p` when the denominator is one.
pub fn render_rational(q: &BigRational) -> String {
    q.to_string()
}

/// Scientific rendering of `q` with `digits` significant digits, e.g. `-1.2500e-3`.
pub fn format_sci(q: &BigRational, digits: usize) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let neg = q.is_negative();
    let a = q.abs();
    // decimal exponent estimate from bit lengths, then corrected
    let est = ((a.numer().bits() as f64 - a.denom().bits() as f64) * std::f64::consts::LOG10_2).floor() as i64;
    let ten = BigRational::from_integer(BigInt::from(10));
    let pow10 = |e: i64| -> BigRational {
        if e >= 0 {
            num_traits::pow(ten.clone(), e as usize)
        } else {
            BigRational::one() / num_traits::pow(ten.clone(), (-e) as usize)
        }
    };
    let mut e = est;
    while a >= pow10(e + 1) {
        e += 1;
    }
    while a < pow10(e) {
        e -= 1;
    }
    let scaled = &a / pow10(e - digits as i64 + 1);
    let (mut m, r) = scaled.numer().div_rem(scaled.denom());
    if BigRational::new(r * 2, scaled.denom().clone()) >= BigRational::one() {
        m += 1;
    }
    let mut s = m.to_string();
    if s.len() > digits {
        s.truncate(digits);
        e += 1;
    }
    let body = if digits > 1 {
        format!("{}.{}", &s[..1], &s[1..])
    } else {
        s
    };
    format!("{}{}e{}", if neg { "-" } else { "" }, body, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_literals() {
        assert_eq!(parse_rational("-1").unwrap(), q(-1, 1));
        assert_eq!(parse_rational("\u{2212}1").unwrap(), q(-1, 1));
        assert_eq!(parse_rational("1/3").unwrap(), q(1, 3));
        assert_eq!(parse_rational("-0.25").unwrap(), q(-1, 4));
        assert_eq!(parse_rational("1.5e-3").unwrap(), q(3, 2000));
        assert_eq!(parse_rational("3/-6").unwrap(), q(-1, 2));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert!(parse_rational("bogus").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn renders() {
        assert_eq!(render_rational(&q(5, 4)), "5/4");
        assert_eq!(render_rational(&q(3, 1)), "3");
        assert_eq!(format_sci(&q(-1, 800), 5), "-1.2500e-3");
        assert_eq!(format_sci(&q(2, 3), 3), "6.67e-1");
        assert_eq!(format_sci(&q(999_999, 1), 3), "1.00e6");
        assert_eq!(format_sci(&q(0, 1), 3), "0");
    }
}
