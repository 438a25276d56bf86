//! Rigorous exp, log, sin/cos and real powers on balls.
//!
//! Each routine evaluates a Taylor-type series at a guard precision of 32
//! extra bits, adds an explicit bound for the omitted tail to the radius,
//! then rounds back to the caller's precision.

use super::ball::Ball;
use super::consts;
use super::dyadic::Dyadic;
use num_rational::BigRational;
use num_traits::Zero;

const GUARD_BITS: u32 = 32;

fn threshold(wp: u32) -> Dyadic {
    Dyadic::pow2(-(wp as i64) - 4)
}

/// `atanh(t)` for `|t| <= 0.35`.
fn atanh_small(t: &Ball, wp: u32) -> Ball {
    let t2 = t * t;
    let mut pow = t.clone();
    let mut sum = t.clone();
    let thr = threshold(wp);
    let mut j: u64 = 1;
    loop {
        pow = &pow * &t2;
        sum = &sum + &pow.div_int(2 * j + 1);
        let bound = pow.abs_upper();
        if bound < thr {
            // tail <= |t|^(2j+3) / (1 - t^2) <= |t|^(2j+1)
            return sum.add_error(&bound);
        }
        j += 1;
    }
}

/// `ln 2` at working precision `wp`.
pub fn ln2(wp: u32) -> Ball {
    let third = Ball::from_rational(&consts::one_third(), wp);
    atanh_small(&third, wp).mul_pow2(1)
}

impl Ball {
    pub fn exp(&self) -> Ball {
        let prec = self.precision();
        let wp = self.working_precision() + GUARD_BITS;
        if self.is_zero() {
            return Ball::from_i64(1, prec);
        }
        let top = self.abs_upper().top().unwrap_or(0);
        let s = (top + 1).max(0);
        let y = self.set_precision(wp).mul_pow2(-s);
        let thr = threshold(wp);
        let mut sum = Ball::from_i64(1, wp);
        let mut term = Ball::from_i64(1, wp);
        let mut k: u64 = 1;
        loop {
            term = (&term * &y).div_int(k);
            sum = &sum + &term;
            let bound = term.abs_upper();
            if bound < thr {
                // |y| <= 1/2 makes the tail at most a third of the last term
                sum = sum.add_error(&bound);
                break;
            }
            k += 1;
        }
        for _ in 0..s {
            sum = &sum * &sum;
        }
        sum.set_precision(prec)
    }

    /// Natural logarithm; `None` unless the ball is certified positive.
    pub fn ln(&self) -> Option<Ball> {
        if self.sign() != Some(1) {
            return None;
        }
        let prec = self.precision();
        let wp = self.working_precision() + GUARD_BITS;
        let k = self.mid().top()? - 1;
        let m = self.set_precision(wp).mul_pow2(-k);
        let one = Ball::from_i64(1, wp);
        let t = (&m - &one).div_ball(&(&m + &one))?;
        let r = atanh_small(&t, wp).mul_pow2(1);
        let r = if k == 0 { r } else { &r + &ln2(wp).mul_int(k) };
        Some(r.set_precision(prec))
    }

    /// `(sin x, cos x)`.
    pub fn sin_cos(&self) -> (Ball, Ball) {
        let prec = self.precision();
        let wp = self.working_precision() + GUARD_BITS;
        let two_pi = consts::pi(wp).mul_pow2(1);
        let turns = (self.to_f64() / (2.0 * std::f64::consts::PI)).round() as i64;
        let y = &self.set_precision(wp) - &two_pi.mul_int(turns);
        let thr = threshold(wp);
        let mut sin = Ball::from_i64(0, wp);
        let mut cos = Ball::from_i64(1, wp);
        let mut term = Ball::from_i64(1, wp);
        let mut k: u64 = 1;
        loop {
            term = (&term * &y).div_int(k);
            match k % 4 {
                1 => sin = &sin + &term,
                2 => cos = &cos - &term,
                3 => sin = &sin - &term,
                _ => cos = &cos + &term,
            }
            let bound = term.abs_upper();
            if k > 4 && bound < thr {
                // Lagrange remainder |y|^(k+1)/(k+1)! <= |term| once k+1 > |y|
                sin = sin.add_error(&bound);
                cos = cos.add_error(&bound);
                break;
            }
            k += 1;
        }
        (sin.set_precision(prec), cos.set_precision(prec))
    }

    pub fn cos(&self) -> Ball {
        self.sin_cos().1
    }

    pub fn sin(&self) -> Ball {
        self.sin_cos().0
    }

    /// `x^r` for certified positive `x`.
    pub fn pow_rational(&self, r: &BigRational) -> Option<Ball> {
        if r.is_zero() {
            return Some(Ball::from_i64(1, self.precision()));
        }
        let l = self.ln()?;
        let e = &l * &Ball::from_rational(r, self.working_precision() + GUARD_BITS);
        Some(e.exp())
    }
}
