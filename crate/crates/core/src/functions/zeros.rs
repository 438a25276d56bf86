//! Real zero sequences for canonical products.
//!
//! Materialized zeros are nonzero and come in increasing order of modulus.
//! The genus parameter `lambda` must be at least the genus of the full
//! (untruncated) sequence so that the infinite product it stands for exists.

use crate::error::{Error, Result};
use crate::scalar::{Ball, Coefficient};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Base `r` of an exponentially growing sequence `c r^n`.
#[derive(Clone, Debug, PartialEq)]
pub enum ExpBase {
    E,
    Rational(BigRational),
}

#[derive(Clone, Debug, PartialEq)]
pub enum ZeroKind {
    Explicit(Vec<BigRational>),
    /// `x_n = scale * base^n`, `n >= 1`.
    ExpGrowth { scale: BigRational, base: ExpBase },
    /// Pairs `-y_n, y_n` with `y_n = (n log(n+1)^L)^(1/rho)`.
    PowerLog { rho: BigRational, log_power: u32 },
    /// `x_n = step * n`, `n >= 1`.
    Arithmetic { step: BigRational },
}

/// Sign pattern of a set of zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroSigns {
    None,
    Positive,
    Negative,
    Mixed,
}

impl ZeroSigns {
    pub fn combine(self, other: ZeroSigns) -> ZeroSigns {
        match (self, other) {
            (ZeroSigns::None, x) | (x, ZeroSigns::None) => x,
            (a, b) if a == b => a,
            _ => ZeroSigns::Mixed,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroSequence {
    pub kind: ZeroKind,
    pub count: usize,
    pub lambda: u8,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidZeros(msg.into())
}

impl ZeroSequence {
    pub fn new(kind: ZeroKind, count: usize, lambda: u8) -> Result<Self> {
        let s = ZeroSequence { kind, count, lambda };
        s.validate()?;
        Ok(s)
    }

    pub fn explicit(zeros: Vec<BigRational>, lambda: u8) -> Result<Self> {
        let count = zeros.len();
        ZeroSequence::new(ZeroKind::Explicit(zeros), count, lambda)
    }

    pub fn validate(&self) -> Result<()> {
        if self.lambda > 1 {
            return Err(invalid("lambda must be 0 or 1"));
        }
        match &self.kind {
            ZeroKind::Explicit(v) => {
                if v.iter().any(|x| x.is_zero()) {
                    return Err(Error::ZeroEntry);
                }
                if v.len() != self.count {
                    return Err(invalid("count must equal the number of explicit zeros"));
                }
            }
            ZeroKind::ExpGrowth { scale, base } => {
                if scale.is_zero() {
                    return Err(Error::ZeroEntry);
                }
                if let ExpBase::Rational(r) = base {
                    if r.abs() <= BigRational::one() {
                        return Err(invalid("exp_growth base must satisfy |r| > 1"));
                    }
                }
            }
            ZeroKind::PowerLog { rho, log_power } => {
                if !rho.is_positive() {
                    return Err(invalid("power_log rho must be positive"));
                }
                if *log_power == 0 {
                    return Err(invalid("power_log log_power must be at least 1"));
                }
                if self.count % 2 != 0 {
                    return Err(invalid("power_log count must be even (symmetric pairs)"));
                }
            }
            ZeroKind::Arithmetic { step } => {
                if step.is_zero() {
                    return Err(Error::ZeroEntry);
                }
            }
        }
        if self.genus() > self.lambda as u32 {
            return Err(invalid(format!(
                "lambda = {} is below the genus {} of the full sequence",
                self.lambda,
                self.genus()
            )));
        }
        Ok(())
    }

    /// Exponent of convergence of the full sequence, from the kind's closed form.
    pub fn declared_exponent(&self) -> BigRational {
        match &self.kind {
            ZeroKind::Explicit(_) | ZeroKind::ExpGrowth { .. } => BigRational::zero(),
            ZeroKind::PowerLog { rho, .. } => rho.clone(),
            ZeroKind::Arithmetic { .. } => BigRational::one(),
        }
    }

    /// Smallest `p` with `sum |x_n|^-(p+1)` finite for the full sequence.
    pub fn genus(&self) -> u32 {
        match &self.kind {
            ZeroKind::Explicit(_) | ZeroKind::ExpGrowth { .. } => 0,
            ZeroKind::Arithmetic { .. } => 1,
            ZeroKind::PowerLog { rho, log_power } => {
                // sum 1/(n^(t/rho) log^(L t/rho)) converges iff t > rho, or t = rho and L > 1
                let mut p: u32 = 0;
                loop {
                    let t = BigRational::from_integer(BigInt::from(p + 1));
                    if t > *rho || (t == *rho && *log_power > 1) {
                        return p;
                    }
                    p += 1;
                }
            }
        }
    }

    pub fn signs(&self) -> ZeroSigns {
        if self.count == 0 {
            return ZeroSigns::None;
        }
        let of = |x: &BigRational| {
            if x.is_positive() {
                ZeroSigns::Positive
            } else {
                ZeroSigns::Negative
            }
        };
        match &self.kind {
            ZeroKind::Explicit(v) => v.iter().map(of).fold(ZeroSigns::None, ZeroSigns::combine),
            ZeroKind::ExpGrowth { scale, base } => match base {
                ExpBase::Rational(r) if r.is_negative() && self.count > 1 => ZeroSigns::Mixed,
                ExpBase::Rational(r) if r.is_negative() => of(&(scale * r)),
                _ => of(scale),
            },
            ZeroKind::PowerLog { .. } => ZeroSigns::Mixed,
            ZeroKind::Arithmetic { step } => of(step),
        }
    }

    /// True when the materialized zeros are closed under negation.
    pub fn is_symmetric(&self) -> bool {
        match &self.kind {
            ZeroKind::PowerLog { .. } => true,
            ZeroKind::Explicit(v) => {
                let mut a: Vec<BigRational> = v.clone();
                let mut b: Vec<BigRational> = v.iter().map(|x| -x).collect();
                a.sort();
                b.sort();
                a == b
            }
            _ => self.count == 0,
        }
    }

    /// Exact zeros in order of increasing modulus, when all are rational.
    pub fn materialize_exact(&self) -> Option<Vec<BigRational>> {
        match &self.kind {
            ZeroKind::Explicit(v) => {
                let mut v = v.clone();
                v.sort_by_key(|x| x.abs());
                Some(v)
            }
            ZeroKind::Arithmetic { step } => Some(
                (1..=self.count)
                    .map(|n| step * BigRational::from_integer(BigInt::from(n)))
                    .collect(),
            ),
            ZeroKind::ExpGrowth {
                scale,
                base: ExpBase::Rational(r),
            } => {
                let mut out = Vec::with_capacity(self.count);
                let mut x = scale.clone();
                for _ in 0..self.count {
                    x = &x * r;
                    out.push(x.clone());
                }
                Some(out)
            }
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(
            self.kind,
            ZeroKind::PowerLog { .. } | ZeroKind::ExpGrowth { base: ExpBase::E, .. }
        )
    }

    /// Positive magnitude `y_n` of the n-th power-log pair.
    fn power_log_magnitude(n: usize, rho: &BigRational, log_power: u32, prec: u32) -> Ball {
        let ln = Ball::from_i64(n as i64 + 1, prec).ln().expect("n+1 > 0");
        let mut base = Ball::from_i64(n as i64, prec);
        for _ in 0..log_power {
            base = &base * &ln;
        }
        base.pow_rational(&(BigRational::one() / rho)).expect("positive base")
    }

    /// Enclosures of `1/x_n` in materialization order.
    pub fn reciprocal_balls(&self, prec: u32) -> Vec<Ball> {
        if let Some(v) = self.materialize_exact() {
            return v.iter().map(|x| Ball::from_rational(&x.recip(), prec)).collect();
        }
        match &self.kind {
            ZeroKind::ExpGrowth { scale, .. } => {
                let inv = Ball::from_rational(&scale.recip(), prec);
                (1..=self.count)
                    .map(|n| &Ball::from_i64(-(n as i64), prec).exp() * &inv)
                    .collect()
            }
            ZeroKind::PowerLog { rho, log_power } => {
                let mut out = Vec::with_capacity(self.count);
                for n in 1..=self.count / 2 {
                    let y = Self::power_log_magnitude(n, rho, *log_power, prec);
                    let r = y.recip().expect("positive magnitude");
                    out.push(-r.clone());
                    out.push(r);
                }
                out
            }
            _ => unreachable!("exact kinds handled above"),
        }
    }

    /// Zeros as balls, in materialization order.
    pub fn materialize_balls(&self, prec: u32) -> Vec<Ball> {
        if let Some(v) = self.materialize_exact() {
            return v.iter().map(|x| Ball::from_rational(x, prec)).collect();
        }
        match &self.kind {
            ZeroKind::ExpGrowth { scale, .. } => {
                let c = Ball::from_rational(scale, prec);
                (1..=self.count)
                    .map(|n| &Ball::from_i64(n as i64, prec).exp() * &c)
                    .collect()
            }
            ZeroKind::PowerLog { rho, log_power } => {
                let mut out = Vec::with_capacity(self.count);
                for n in 1..=self.count / 2 {
                    let y = Self::power_log_magnitude(n, rho, *log_power, prec);
                    out.push(-y.clone());
                    out.push(y);
                }
                out
            }
            _ => unreachable!("exact kinds handled above"),
        }
    }

    /// Zeros as `f64`, for diagnostics only.
    pub fn materialize_f64(&self) -> Vec<f64> {
        match &self.kind {
            ZeroKind::ExpGrowth { scale, base: ExpBase::E } => {
                let c = Coefficient::to_f64(scale);
                (1..=self.count).map(|n| c * (n as f64).exp()).collect()
            }
            ZeroKind::PowerLog { rho, log_power } => {
                let r = Coefficient::to_f64(rho);
                let mut out = Vec::with_capacity(self.count);
                for n in 1..=self.count / 2 {
                    let n = n as f64;
                    let y = (n * (n + 1.0).ln().powi(*log_power as i32)).powf(1.0 / r);
                    out.push(-y);
                    out.push(y);
                }
                out
            }
            _ => self
                .materialize_exact()
                .unwrap_or_default()
                .iter()
                .map(Coefficient::to_f64)
                .collect(),
        }
    }
}
