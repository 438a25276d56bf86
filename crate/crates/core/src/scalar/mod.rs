//! Coefficient backends.
//!
//! Two scalar types implement [`Coefficient`]: exact [`BigRational`] and the
//! error-tracked [`Ball`]. Invariants:
//!
//! * the exact backend reports an error bound of zero and never an
//!   indeterminate sign;
//! * a ball reports `+`/`-` only when its midpoint exceeds its radius, and
//!   `0` only for the exact zero.

pub mod ball;
pub mod consts;
pub mod dyadic;
pub mod elementary;
pub mod rational;

pub use ball::{Ball, DEFAULT_PRECISION};
pub use dyadic::Dyadic;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt::Debug;
use std::ops::Neg;

/// Certified sign of a coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
    Indeterminate,
}

impl Sign {
    pub fn from_i32(s: i32) -> Sign {
        match s.signum() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    /// `-1`, `0` or `1`; `None` when indeterminate.
    pub fn value(self) -> Option<i32> {
        match self {
            Sign::Negative => Some(-1),
            Sign::Zero => Some(0),
            Sign::Positive => Some(1),
            Sign::Indeterminate => None,
        }
    }

    pub fn is_nonzero(self) -> bool {
        matches!(self, Sign::Negative | Sign::Positive)
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
            Sign::Indeterminate => '?',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Negative),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Positive),
            '?' => Some(Sign::Indeterminate),
            _ => None,
        }
    }
}

/// Which arithmetic produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Backend {
    Exact,
    Ball { precision: u32 },
}

impl Backend {
    pub fn label(&self) -> String {
        match self {
            Backend::Exact => "exact".to_string(),
            Backend::Ball { precision } => format!("ball/{precision}"),
        }
    }
}

/// Scalar interface shared by the series and sign machinery.
pub trait Coefficient: Clone + Debug + PartialEq + Send + Sync + Zero + One + Neg<Output = Self> {
    fn backend(&self) -> Backend;
    fn from_rational(q: &BigRational, precision: u32) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn mul_int(&self, k: i64) -> Self;
    /// Division by a positive integer.
    fn div_int(&self, k: u64) -> Self;
    /// True only for a value known to be exactly zero.
    fn is_exact_zero(&self) -> bool;
    fn certified_sign(&self) -> Sign;
    /// Upper bound on the distance to the true value.
    fn error_bound(&self) -> Dyadic;
    /// `ln |value|` of the representative, `None` for zero.
    fn ln_abs(&self) -> Option<f64>;
    fn to_f64(&self) -> f64;
    /// Canonical text for reports.
    fn render(&self) -> String;
    fn abs_value(&self) -> Self;
}

impl Coefficient for BigRational {
    fn backend(&self) -> Backend {
        Backend::Exact
    }
    fn from_rational(q: &BigRational, _precision: u32) -> Self {
        q.clone()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn mul_int(&self, k: i64) -> Self {
        self * BigRational::from_integer(BigInt::from(k))
    }
    fn div_int(&self, k: u64) -> Self {
        self / BigRational::from_integer(BigInt::from(k))
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
    fn certified_sign(&self) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if self.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
    fn error_bound(&self) -> Dyadic {
        Dyadic::zero()
    }
    fn ln_abs(&self) -> Option<f64> {
        if self.is_zero() {
            return None;
        }
        let n = Dyadic::from_bigint(self.numer()).log2_abs()?;
        let d = Dyadic::from_bigint(self.denom()).log2_abs()?;
        Some((n - d) * std::f64::consts::LN_2)
    }
    fn to_f64(&self) -> f64 {
        self.ln_abs()
            .map(|l| {
                let v = l.exp();
                if self.is_negative() {
                    -v
                } else {
                    v
                }
            })
            .unwrap_or(0.0)
    }
    fn render(&self) -> String {
        rational::render_rational(self)
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

impl Coefficient for Ball {
    fn backend(&self) -> Backend {
        Backend::Ball {
            precision: self.working_precision(),
        }
    }
    fn from_rational(q: &BigRational, precision: u32) -> Self {
        Ball::from_rational(q, precision)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn mul_int(&self, k: i64) -> Self {
        Ball::mul_int(self, k)
    }
    fn div_int(&self, k: u64) -> Self {
        Ball::div_int(self, k)
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
    fn certified_sign(&self) -> Sign {
        match self.sign() {
            Some(s) => Sign::from_i32(s),
            None => Sign::Indeterminate,
        }
    }
    fn error_bound(&self) -> Dyadic {
        self.rad().clone()
    }
    fn ln_abs(&self) -> Option<f64> {
        self.ln_abs_mid()
    }
    fn to_f64(&self) -> f64 {
        Ball::to_f64(self)
    }
    fn render(&self) -> String {
        rational::format_sci(&self.mid().to_rational(), 20)
    }
    fn abs_value(&self) -> Self {
        self.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_backend_never_indeterminate() {
        let q = BigRational::new(BigInt::from(-3), BigInt::from(7));
        assert_eq!(q.certified_sign(), Sign::Negative);
        assert!(q.error_bound().is_zero());
        assert!((q.ln_abs().unwrap() - (3.0f64 / 7.0).ln()).abs() < 1e-14);
        assert!((Coefficient::to_f64(&q) + 3.0 / 7.0).abs() < 1e-14);
    }

    #[test]
    fn tiny_rational_logs_do_not_underflow() {
        let q = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 500));
        let l = q.ln_abs().unwrap();
        assert!((l + 500.0 * 10f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn sign_symbols_roundtrip() {
        for s in [Sign::Negative, Sign::Zero, Sign::Positive, Sign::Indeterminate] {
            assert_eq!(Sign::from_symbol(s.symbol()), Some(s));
        }
    }
}
