//! High-precision constants.
//!
//! Digits are the leading decimals of pi (OEIS A000796) and Euler's constant
//! (OEIS A001620), cross-checked against an independent 230-digit
//! evaluation. Each string is correct to within one unit in its last place.

use super::ball::Ball;
use super::dyadic::Dyadic;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One};

const PI_DIGITS: &str = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808651328230664709384460955058223172535940812848111745028410270193852110555964462294895493038196442881097566593";

const EULER_GAMMA_DIGITS: &str = "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951463144724980708248096050401448654283622417399764492353625350033374293733773767394279259525824709491600873520394817";

/// Decimal digits carried by the stored constants.
pub const CONSTANT_DIGITS: u32 = 210;

/// Ball enclosing a decimal string that is correct to one unit in the last place.
pub fn ball_from_decimal(s: &str, prec: u32) -> Ball {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits = format!("{int}{frac}");
    let num = BigInt::from_str_radix(&digits, 10).expect("constant digits");
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let q = BigRational::new(num, den);
    // 10^-d <= 2^-floor(d log2 10)
    let bits = (frac.len() as u64 * 33219) / 10000;
    Ball::from_rational(&q, prec).add_error(&Dyadic::pow2(-(bits as i64)))
}

pub fn pi(prec: u32) -> Ball {
    ball_from_decimal(PI_DIGITS, prec)
}

pub fn euler_gamma(prec: u32) -> Ball {
    ball_from_decimal(EULER_GAMMA_DIGITS, prec)
}

/// Largest working precision the stored constants can honestly support.
pub fn constant_precision_limit() -> u32 {
    (CONSTANT_DIGITS as u64 * 33219 / 10000) as u32
}

/// `1/3` as an exact rational.
pub(crate) fn one_third() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_enclose_known_values() {
        let p = pi(256);
        let approx = BigRational::new(
            BigInt::from_str_radix("314159265358979323846264338327950288", 10).unwrap(),
            num_traits::pow(BigInt::from(10), 35),
        );
        assert!(pi(64).contains_rational(&approx));
        assert!(!p.contains_rational(&approx));
        assert!((p.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        assert!((euler_gamma(128).to_f64() - 0.5772156649015329).abs() < 1e-15);
        assert!(p.rad().log2_abs().unwrap() < -250.0);
    }
}
