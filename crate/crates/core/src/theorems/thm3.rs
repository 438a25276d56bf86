//! Counterexample construction `exp(a z^2) Pi1(z) Pi2(z)`.
//!
//! `Pi1` has the sparse positive zeros `x_n = e^n` (or the exact surrogate
//! `3^n`, also of exponent of convergence 0). For `rho > 0`, `Pi2` has the
//! symmetric zeros `+-(n log(n+1)^L)^(1/rho)`, with `L = 1` except at
//! `rho = 2`, where `L = 2` keeps the genus at 1. Conclusions concern the
//! truncated products only.

use crate::error::{Error, Result};
use crate::functions::{build_function, ExpBase, FunctionSpec, ZeroKind, ZeroSequence};
use crate::scalar::{Backend, DEFAULT_PRECISION};
use crate::series::AnySeries;
use crate::signs::{sign_sequence, tail_check, TailReport};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Thm3Base {
    E,
    /// Exact surrogate `3^n`.
    Three,
}

impl Thm3Base {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Thm3Base::E),
            "3" => Ok(Thm3Base::Three),
            _ => Err(Error::InvalidArgument(format!("base must be `e` or `3`, got `{s}`"))),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Thm3Base::E => "e",
            Thm3Base::Three => "3",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Thm3Construction {
    /// Product factors only; `gauss_a` is attached by [`thm3_violations`].
    pub spec: FunctionSpec,
    pub rho: BigRational,
    pub count1: usize,
    /// Number of symmetric pairs in `Pi2` (0 when `rho = 0`).
    pub count2: usize,
    pub base: Thm3Base,
}

impl Thm3Construction {
    pub fn declared_exponent(&self) -> BigRational {
        self.spec
            .product_factors
            .iter()
            .map(ZeroSequence::declared_exponent)
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn with_gaussian(&self, a: &BigRational) -> FunctionSpec {
        FunctionSpec {
            gauss_a: a.clone(),
            ..self.spec.clone()
        }
    }
}

pub fn thm3_construct(rho: &BigRational, count1: usize, count2: usize, base: Thm3Base) -> Result<Thm3Construction> {
    let two = BigRational::from_integer(BigInt::from(2));
    if rho.is_negative() || *rho > two {
        return Err(Error::InvalidArgument("rho must lie in [0, 2]".into()));
    }
    if count1 == 0 || (!rho.is_zero() && count2 == 0) {
        return Err(Error::InvalidArgument("zero counts must be at least 1".into()));
    }
    let b = match base {
        Thm3Base::E => ExpBase::E,
        Thm3Base::Three => ExpBase::Rational(BigRational::from_integer(BigInt::from(3))),
    };
    let pi1 = ZeroSequence::new(
        ZeroKind::ExpGrowth {
            scale: BigRational::from_integer(BigInt::from(1)),
            base: b,
        },
        count1,
        0,
    )?;
    let mut factors = vec![pi1];
    let mut pairs = 0;
    if !rho.is_zero() {
        let kind = ZeroKind::PowerLog {
            rho: rho.clone(),
            log_power: if *rho == two { 2 } else { 1 },
        };
        let probe = ZeroSequence {
            kind: kind.clone(),
            count: 2 * count2,
            lambda: 1,
        };
        let genus = probe.genus();
        factors.insert(0, ZeroSequence::new(kind, 2 * count2, genus as u8)?);
        pairs = count2;
    }
    Ok(Thm3Construction {
        spec: FunctionSpec {
            product_factors: factors,
            ..Default::default()
        },
        rho: rho.clone(),
        count1,
        count2: pairs,
        base,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Thm3Outcome {
    pub tail: TailReport,
    pub backend: Backend,
    /// Precision actually used (after raising it to clear indeterminate signs).
    pub precision: u32,
}

const MAX_PRECISION: u32 = 4096;

/// Tail report of `exp(a z^2) psi` to `horizon`. Ball runs double the precision
/// until every sign is certified or `4096` bits is reached.
pub fn thm3_violations(c: &Thm3Construction, a: &BigRational, horizon: usize, precision: u32) -> Result<Thm3Outcome> {
    if !a.is_negative() {
        return Err(Error::InvalidArgument("a must be negative".into()));
    }
    let spec = c.with_gaussian(a);
    let mut prec = if precision == 0 { DEFAULT_PRECISION } else { precision };
    loop {
        let s = build_function(&spec, horizon, prec)?;
        let (signs, backend) = match &s {
            AnySeries::Exact(e) => (sign_sequence(e), s.backend()),
            AnySeries::Approx(b) => (sign_sequence(b), s.backend()),
        };
        if signs.indeterminate_count() == 0 || s.is_exact() || prec * 2 > MAX_PRECISION {
            return Ok(Thm3Outcome {
                tail: tail_check(&signs),
                backend,
                precision: prec,
            });
        }
        prec *= 2;
    }
}
