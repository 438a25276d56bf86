//! Exact binary floating values `man * 2^exp` with arbitrary-size mantissa.
//!
//! Arithmetic here is exact; rounding is explicit and always reports (or
//! bounds) the error it introduced. Mantissas are kept odd so that equal
//! values compare equal structurally.

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            man: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn new(man: BigInt, exp: i64) -> Self {
        if man.is_zero() {
            return Dyadic::zero();
        }
        let tz = man.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            Dyadic { man, exp }
        } else {
            Dyadic {
                man: man >> tz,
                exp: exp + tz as i64,
            }
        }
    }

    pub fn from_i64(v: i64) -> Self {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        Dyadic::new(v.clone(), 0)
    }

    /// The value `2^e`.
    pub fn pow2(e: i64) -> Self {
        Dyadic {
            man: BigInt::one(),
            exp: e,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    pub fn signum(&self) -> i32 {
        match self.man.sign() {
            BigSign::Minus => -1,
            BigSign::NoSign => 0,
            BigSign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            man: self.man.abs(),
            exp: self.exp,
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            man: -&self.man,
            exp: self.exp,
        }
    }

    pub fn bits(&self) -> u64 {
        self.man.bits()
    }

    /// `t` with `2^(t-1) <= |x| < 2^t`; `None` for zero.
    pub fn top(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.man.bits() as i64)
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as u64;
        let b = &other.man << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            man: &self.man * &other.man,
            exp: self.exp + other.exp,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Dyadic {
        Dyadic::new(&self.man * k, self.exp)
    }

    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            man: self.man.clone(),
            exp: self.exp + k,
        }
    }

    pub fn cmp_abs(&self, other: &Dyadic) -> Ordering {
        match (self.top(), other.top()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(ta), Some(tb)) => {
                if ta != tb {
                    return ta.cmp(&tb);
                }
                let e = self.exp.min(other.exp);
                let a = self.man.magnitude() << (self.exp - e) as u64;
                let b = other.man.magnitude() << (other.exp - e) as u64;
                a.cmp(&b)
            }
        }
    }

    /// Truncates toward zero to at most `prec` significant bits.
    ///
    /// Returns the rounded value and, when rounding happened, `e` such that
    /// the error is strictly below `2^e`.
    pub fn round(&self, prec: u32) -> (Dyadic, Option<i64>) {
        let bits = self.man.bits();
        if bits <= prec as u64 {
            return (self.clone(), None);
        }
        let shift = bits - prec as u64;
        let mag = self.man.magnitude() >> shift;
        let man = BigInt::from_biguint(self.man.sign(), mag);
        let e = self.exp + shift as i64;
        (Dyadic::new(man, e), Some(e))
    }

    /// Smallest value with at most `prec` bits that is `>= |self|`.
    pub fn round_up_abs(&self, prec: u32) -> Dyadic {
        let bits = self.man.bits();
        if bits <= prec as u64 {
            return self.abs();
        }
        let shift = bits - prec as u64;
        let mag: BigUint = (self.man.magnitude() >> shift) + 1u32;
        Dyadic::new(BigInt::from(mag), self.exp + shift as i64)
    }

    /// Upper bound for `self + other` (both nonnegative) with `prec` bits,
    /// avoiding long shifts when the exponents are far apart.
    pub fn add_up(&self, other: &Dyadic, prec: u32) -> Dyadic {
        let (big, small) = if self.cmp_abs(other) == Ordering::Less {
            (other, self)
        } else {
            (self, other)
        };
        match (big.top(), small.top()) {
            (_, None) => big.round_up_abs(prec),
            (Some(tb), Some(ts)) if tb > ts + prec as i64 + 4 => {
                let r = big.round_up_abs(prec);
                let t = r.top().unwrap_or(tb);
                r.add(&Dyadic::pow2(t - prec as i64))
            }
            _ => big.add(small).round_up_abs(prec),
        }
    }

    /// Upper bound for `a / b` with `a >= 0`, `b > 0`, about `prec` bits.
    pub fn div_up(a: &Dyadic, b: &Dyadic, prec: u32) -> Dyadic {
        assert!(b.is_positive(), "div_up needs a positive divisor");
        if a.is_zero() {
            return Dyadic::zero();
        }
        let s = prec as i64 + b.bits() as i64 - a.bits() as i64 + 1;
        let (num, den) = if s >= 0 {
            (a.man.magnitude() << s as u64, b.man.magnitude().clone())
        } else {
            (a.man.magnitude().clone(), b.man.magnitude() << (-s) as u64)
        };
        let (q, r) = num.div_rem(&den);
        let q = if r.is_zero() { q } else { q + 1u32 };
        Dyadic::new(BigInt::from(q), a.exp - b.exp - s)
    }

    /// Truncated binary expansion of `q` with at least `prec` bits; the
    /// second component bounds the error as in [`Dyadic::round`].
    pub fn from_rational(q: &BigRational, prec: u32) -> (Dyadic, Option<i64>) {
        if q.is_zero() {
            return (Dyadic::zero(), None);
        }
        let num = q.numer();
        let den = q.denom();
        if den.is_one() {
            return Dyadic::from_bigint(num).round(prec);
        }
        let s = prec as i64 + den.bits() as i64 - num.bits() as i64 + 1;
        let (n, d) = if s >= 0 {
            (num.magnitude() << s as u64, den.magnitude().clone())
        } else {
            (num.magnitude().clone(), den.magnitude() << (-s) as u64)
        };
        let (m, r) = n.div_rem(&d);
        let man = BigInt::from_biguint(num.sign(), m);
        let err = if r.is_zero() { None } else { Some(-s) };
        (Dyadic::new(man, -s), err)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.man << self.exp as u64)
        } else {
            BigRational::new(self.man.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Leading 64 bits of the mantissa as `f64` and the matching exponent.
    fn head(&self) -> (f64, i64) {
        let bits = self.man.bits();
        let shift = bits.saturating_sub(64);
        let m = (self.man.magnitude() >> shift).to_f64().unwrap_or(f64::MAX);
        let m = if self.man.is_negative() { -m } else { m };
        (m, self.exp + shift as i64)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let (m, e) = self.head();
        ldexp(m, e)
    }

    /// `log2 |x|` without overflow or underflow; `None` for zero.
    pub fn log2_abs(&self) -> Option<f64> {
        if self.is_zero() {
            return None;
        }
        let (m, e) = self.head();
        Some(m.abs().log2() + e as f64)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        match sa {
            0 => Ordering::Equal,
            1 => self.cmp_abs(other),
            _ => other.cmp_abs(self),
        }
    }
}

/// `m * 2^e` in `f64`, saturating to 0 or infinity.
pub fn ldexp(m: f64, e: i64) -> f64 {
    if m == 0.0 {
        return 0.0;
    }
    if e > 2200 {
        return m.signum() * f64::INFINITY;
    }
    if e < -2300 {
        return 0.0 * m.signum();
    }
    let mut v = m;
    let mut e = e;
    while e > 1000 {
        v *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        v *= 2f64.powi(-1000);
        e += 1000;
    }
    v * 2f64.powi(e as i32)
}
