//! Mid-radius balls over [`Dyadic`] values.
//!
//! A ball `[m ± r]` stands for every real within `r` of `m`. Each operation
//! returns a ball containing all results of the operation applied to members
//! of its inputs; rounding of the midpoint is folded into the radius.

use super::dyadic::Dyadic;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// Working precision used when no operand states one.
pub const DEFAULT_PRECISION: u32 = 256;

/// Bits kept in radii. Radii are always rounded up.
pub const RAD_BITS: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    mid: Dyadic,
    rad: Dyadic,
    /// Midpoint precision in bits; 0 means "inherit from the other operand".
    prec: u32,
}

fn effective(p: u32) -> u32 {
    if p == 0 {
        DEFAULT_PRECISION
    } else {
        p
    }
}

impl Ball {
    pub fn exact(mid: Dyadic, prec: u32) -> Ball {
        Ball {
            mid,
            rad: Dyadic::zero(),
            prec,
        }
    }

    /// Ball with midpoint `mid` rounded to `prec` bits and radius at least `rad`.
    pub fn with_radius(mid: Dyadic, rad: Dyadic, prec: u32) -> Ball {
        let (m, e) = mid.round(effective(prec));
        let mut r = rad.round_up_abs(RAD_BITS);
        if let Some(e) = e {
            r = r.add_up(&Dyadic::pow2(e), RAD_BITS);
        }
        Ball { mid: m, rad: r, prec }
    }

    pub fn from_i64(v: i64, prec: u32) -> Ball {
        Ball::with_radius(Dyadic::from_i64(v), Dyadic::zero(), prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Ball {
        let (m, e) = Dyadic::from_rational(q, effective(prec));
        let rad = e.map(Dyadic::pow2).unwrap_or_default();
        Ball::with_radius(m, rad, prec)
    }

    pub fn mid(&self) -> &Dyadic {
        &self.mid
    }

    pub fn rad(&self) -> &Dyadic {
        &self.rad
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn working_precision(&self) -> u32 {
        effective(self.prec)
    }

    pub fn set_precision(&self, prec: u32) -> Ball {
        Ball::with_radius(self.mid.clone(), self.rad.clone(), prec)
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// Widens the radius by `e >= 0`.
    pub fn add_error(&self, e: &Dyadic) -> Ball {
        Ball {
            mid: self.mid.clone(),
            rad: self.rad.add_up(&e.abs(), RAD_BITS),
            prec: self.prec,
        }
    }

    /// Upper bound for every `|x|` in the ball.
    pub fn abs_upper(&self) -> Dyadic {
        self.mid.abs().add_up(&self.rad, RAD_BITS)
    }

    /// Lower bound for every `|x|` in the ball (zero when it contains 0).
    pub fn abs_lower(&self) -> Dyadic {
        let d = self.mid.abs().sub(&self.rad);
        if d.is_negative() {
            Dyadic::zero()
        } else {
            d
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.mid.cmp_abs(&self.rad) != Ordering::Greater
    }

    /// `Some(sign)` when every member has that sign; `Some(0)` only for the exact zero.
    pub fn sign(&self) -> Option<i32> {
        if self.mid.is_zero() && self.rad.is_zero() {
            Some(0)
        } else if self.mid.cmp_abs(&self.rad) == Ordering::Greater {
            Some(self.mid.signum())
        } else {
            None
        }
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        (q - self.mid.to_rational()).abs() <= self.rad.to_rational()
    }

    /// True when the two balls share a point.
    pub fn overlaps(&self, other: &Ball) -> bool {
        let d = self.mid.sub(&other.mid).abs();
        let r = self.rad.add(&other.rad);
        d <= r
    }

    pub fn abs(&self) -> Ball {
        Ball {
            mid: self.mid.abs(),
            rad: self.rad.clone(),
            prec: self.prec,
        }
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Ball {
        Ball {
            mid: self.mid.mul_pow2(k),
            rad: self.rad.mul_pow2(k),
            prec: self.prec,
        }
    }

    pub fn add_ball(&self, other: &Ball) -> Ball {
        let prec = self.prec.max(other.prec);
        let wp = effective(prec);
        let rad = self.rad.add_up(&other.rad, RAD_BITS);
        match (self.mid.top(), other.mid.top()) {
            (None, _) => Ball::with_radius(other.mid.clone(), rad, prec),
            (_, None) => Ball::with_radius(self.mid.clone(), rad, prec),
            (Some(ta), Some(tb)) => {
                // A summand far below the rounding unit only widens the radius.
                if ta > tb + wp as i64 + 2 {
                    Ball::with_radius(self.mid.clone(), rad.add_up(&Dyadic::pow2(tb), RAD_BITS), prec)
                } else if tb > ta + wp as i64 + 2 {
                    Ball::with_radius(other.mid.clone(), rad.add_up(&Dyadic::pow2(ta), RAD_BITS), prec)
                } else {
                    Ball::with_radius(self.mid.add(&other.mid), rad, prec)
                }
            }
        }
    }

    pub fn mul_ball(&self, other: &Ball) -> Ball {
        let prec = self.prec.max(other.prec);
        if (self.mid.is_zero() && self.rad.is_zero()) || (other.mid.is_zero() && other.rad.is_zero()) {
            return Ball::exact(Dyadic::zero(), prec);
        }
        let mut rad = Dyadic::zero();
        if !other.rad.is_zero() {
            rad = rad.add_up(&self.mid.abs().mul(&other.rad), RAD_BITS);
        }
        if !self.rad.is_zero() {
            rad = rad.add_up(&other.mid.abs().mul(&self.rad), RAD_BITS);
            rad = rad.add_up(&self.rad.mul(&other.rad), RAD_BITS);
        }
        Ball::with_radius(self.mid.mul(&other.mid), rad, prec)
    }

    pub fn mul_int(&self, k: i64) -> Ball {
        let k = BigInt::from(k);
        Ball::with_radius(self.mid.mul_int(&k), self.rad.mul_int(&k.abs()), self.prec)
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Ball {
        Ball::with_radius(self.mid.mul_int(k), self.rad.mul_int(&k.abs()), self.prec)
    }

    /// Division by a positive integer.
    pub fn div_int(&self, k: u64) -> Ball {
        assert!(k > 0, "division by zero");
        let d = Dyadic::from_bigint(&BigInt::from(k));
        let wp = effective(self.prec);
        let rad = Dyadic::div_up(&self.rad, &d, RAD_BITS);
        if self.mid.is_zero() {
            return Ball {
                mid: Dyadic::zero(),
                rad,
                prec: self.prec,
            };
        }
        let q = BigRational::new_raw(self.mid.mantissa().clone(), BigInt::from(k));
        let (m, e) = Dyadic::from_rational(&q, wp);
        let mut rad = rad;
        if let Some(e) = e {
            rad = rad.add_up(&Dyadic::pow2(e + self.mid.exponent()), RAD_BITS);
        }
        Ball::with_radius(m.mul_pow2(self.mid.exponent()), rad, self.prec)
    }

    /// Reciprocal; `None` unless the ball excludes zero.
    pub fn recip(&self) -> Option<Ball> {
        let lower = self.abs_lower();
        if lower.is_zero() {
            return None;
        }
        let wp = effective(self.prec);
        let one = BigRational::one();
        let m = self.mid.to_rational();
        let (q, e) = Dyadic::from_rational(&(one / m), wp);
        let mut rad = Dyadic::zero();
        if let Some(e) = e {
            rad = Dyadic::pow2(e);
        }
        if !self.rad.is_zero() {
            let den = self.mid.abs().mul(&lower);
            rad = rad.add_up(&Dyadic::div_up(&self.rad, &den, RAD_BITS), RAD_BITS);
        }
        Some(Ball::with_radius(q, rad, self.prec))
    }

    pub fn div_ball(&self, other: &Ball) -> Option<Ball> {
        other.recip().map(|r| self.mul_ball(&r))
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    /// Natural log of `|mid|`; `None` when the midpoint is zero.
    pub fn ln_abs_mid(&self) -> Option<f64> {
        self.mid.log2_abs().map(|l| l * std::f64::consts::LN_2)
    }

    /// Upper bound on the radius as `f64` (rounded away from zero).
    pub fn rad_f64(&self) -> f64 {
        let r = self.rad.to_f64();
        if r == 0.0 && !self.rad.is_zero() {
            f64::MIN_POSITIVE
        } else {
            r * (1.0 + 1e-15)
        }
    }
}

impl Zero for Ball {
    fn zero() -> Self {
        Ball::exact(Dyadic::zero(), 0)
    }
    fn is_zero(&self) -> bool {
        self.mid.is_zero() && self.rad.is_zero()
    }
}

impl One for Ball {
    fn one() -> Self {
        Ball::exact(Dyadic::from_i64(1), 0)
    }
}

impl Neg for Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        Ball {
            mid: self.mid.neg(),
            rad: self.rad,
            prec: self.prec,
        }
    }
}

impl Neg for &Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        self.clone().neg()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<Ball> for Ball {
            type Output = Ball;
            fn $m(self, rhs: Ball) -> Ball {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Ball> for &'a Ball {
            type Output = Ball;
            fn $m(self, rhs: &'a Ball) -> Ball {
                $body(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Ball, b: &Ball| a.add_ball(b));
forward_binop!(Sub, sub, |a: &Ball, b: &Ball| a.add_ball(&-b));
forward_binop!(Mul, mul, |a: &Ball, b: &Ball| a.mul_ball(b));

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn enclosure_of_rational_ops() {
        let a = Ball::from_rational(&q(1, 3), 64);
        let b = Ball::from_rational(&q(-2, 7), 64);
        assert!((&a + &b).contains_rational(&(q(1, 3) + q(-2, 7))));
        assert!((&a * &b).contains_rational(&(q(1, 3) * q(-2, 7))));
        assert!((&a - &b).contains_rational(&(q(1, 3) - q(-2, 7))));
        assert!(a.div_int(11).contains_rational(&q(1, 33)));
        assert!(b.recip().unwrap().contains_rational(&q(-7, 2)));
        assert!(a.div_ball(&b).unwrap().contains_rational(&q(-7, 6)));
    }

    #[test]
    fn signs_are_certified_only_outside_radius() {
        let a = Ball::from_rational(&q(1, 3), 64);
        assert_eq!(a.sign(), Some(1));
        let z = &a - &a;
        assert_eq!(z.sign(), None);
        assert_eq!(Ball::zero().sign(), Some(0));
        assert!(z.recip().is_none());
    }

    #[test]
    fn tiny_summand_goes_to_radius() {
        let a = Ball::from_i64(1, 64);
        let b = Ball::exact(Dyadic::pow2(-400), 64);
        let s = &a + &b;
        assert!(s.contains_rational(&(q(1, 1) + Dyadic::pow2(-400).to_rational())));
        assert!(s.mid().bits() <= 64);
    }

    #[test]
    fn precision_zero_inherits() {
        let a = Ball::one();
        let b = Ball::from_rational(&q(1, 3), 80);
        assert_eq!((&a * &b).precision(), 80);
        assert_eq!(Ball::from_rational(&q(1, 3), 0).mid().bits() <= DEFAULT_PRECISION as u64, true);
    }
}
