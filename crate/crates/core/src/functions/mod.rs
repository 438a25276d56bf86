//! Function specifications `c z^k exp(a z^2 + b z) prod(factors)` and their
//! truncated Maclaurin series.
//!
//! `build_function` is exact iff every factor is exact; otherwise the exact
//! factors are promoted to balls at the requested precision.

pub mod classical;
pub mod product;
pub mod recip_gamma;
pub mod zeros;

pub use classical::{classical_series, laguerre_product_form, ClassicalFactor, RealParam};
pub use product::canonical_product_series;
pub use recip_gamma::recip_gamma_series;
pub use zeros::{ExpBase, ZeroKind, ZeroSequence, ZeroSigns};

use crate::error::{Error, Result};
use crate::scalar::{Ball, DEFAULT_PRECISION};
use crate::series::{AnySeries, TruncatedSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq)]
pub struct FunctionSpec {
    pub scale: BigRational,
    pub monomial_power: u32,
    pub gauss_a: BigRational,
    pub lin_b: BigRational,
    pub product_factors: Vec<ZeroSequence>,
    pub classical_factors: Vec<ClassicalFactor>,
}

impl Default for FunctionSpec {
    fn default() -> Self {
        FunctionSpec {
            scale: BigRational::one(),
            monomial_power: 0,
            gauss_a: BigRational::zero(),
            lin_b: BigRational::zero(),
            product_factors: Vec::new(),
            classical_factors: Vec::new(),
        }
    }
}

/// Parity of a declared function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

impl FunctionSpec {
    pub fn validate(&self) -> Result<()> {
        for (i, z) in self.product_factors.iter().enumerate() {
            z.validate()
                .map_err(|e| Error::InvalidSpec(format!("product_factors[{i}]: {e}")))?;
        }
        Ok(())
    }

    pub fn is_exact(&self) -> bool {
        self.product_factors.iter().all(ZeroSequence::is_exact)
            && self.classical_factors.iter().all(ClassicalFactor::is_exact)
    }

    /// Parity read off the declaration: symmetric zeros, `b = 0`, no classical factors.
    pub fn parity(&self) -> Parity {
        let even_body = self.lin_b.is_zero()
            && self.classical_factors.is_empty()
            && self.product_factors.iter().all(ZeroSequence::is_symmetric);
        if !even_body {
            Parity::Neither
        } else if self.monomial_power % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Exact expansion of `exp(a z^2 + b z)`.
pub fn gaussian_series(a: &BigRational, b: &BigRational, order: usize) -> TruncatedSeries<BigRational> {
    let s = TruncatedSeries::from_coeffs(vec![BigRational::zero(), b.clone(), a.clone()], order);
    s.exp().expect("constant term is zero")
}

enum Job<'a> {
    Product(&'a ZeroSequence),
    Classical(&'a ClassicalFactor),
}

/// Truncated series of the declared function at order `order`.
pub fn build_function(spec: &FunctionSpec, order: usize, precision: u32) -> Result<AnySeries> {
    spec.validate()?;
    let precision = if precision == 0 { DEFAULT_PRECISION } else { precision };
    let jobs: Vec<Job> = spec
        .product_factors
        .iter()
        .map(Job::Product)
        .chain(spec.classical_factors.iter().map(Job::Classical))
        .collect();
    let parts: Vec<Result<AnySeries>> = jobs
        .par_iter()
        .map(|j| match j {
            Job::Product(z) => canonical_product_series(z, order, precision),
            Job::Classical(f) => classical_series(f, order, precision),
        })
        .collect();
    let mut exact = gaussian_series(&spec.gauss_a, &spec.lin_b, order);
    let mut approx: Option<TruncatedSeries<Ball>> = None;
    for p in parts {
        match p? {
            AnySeries::Exact(s) => exact = exact.mul(&s),
            AnySeries::Approx(s) => {
                approx = Some(match approx {
                    None => s,
                    Some(a) => a.mul(&s),
                })
            }
        }
    }
    let k = spec.monomial_power as usize;
    Ok(match approx {
        None => AnySeries::Exact(exact.scale(&spec.scale).shift(k)),
        Some(a) => {
            let s = a.mul(&exact.to_balls(precision));
            AnySeries::Approx(s.scale(&Ball::from_rational(&spec.scale, precision)).shift(k))
        }
    })
}

/// The subclasses of the Laguerre-Polya class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Subclass {
    /// Gaussian factor present (`a < 0`).
    #[serde(rename = "LPa")]
    LaguerrePolyaA,
    /// Type I: `a = 0`, genus-zero product, zeros of one sign compatible with `b`.
    #[serde(rename = "LPI")]
    TypeI,
    /// `a = 0` but not type I.
    #[serde(rename = "LP0")]
    LaguerrePolya0,
    /// `a > 0`: outside the class.
    #[serde(rename = "not-LP")]
    Outside,
}

impl Subclass {
    pub fn label(&self) -> &'static str {
        match self {
            Subclass::LaguerrePolyaA => "LPa",
            Subclass::TypeI => "LPI",
            Subclass::LaguerrePolya0 => "LP0",
            Subclass::Outside => "not-LP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub subclass: Subclass,
    pub reason: String,
}

fn sine_vanishes(angle: &RealParam) -> Option<bool> {
    match angle {
        RealParam::Rational(q) => Some(q.is_zero()),
        RealParam::PiMultiple(q) => {
            if q.is_integer() {
                Some(true)
            } else {
                Some(false)
            }
        }
    }
}

/// `cos(angle)` when `sin(angle) = 0`: `+1` or `-1`.
fn cos_sign_at_sine_zero(angle: &RealParam) -> i64 {
    match angle {
        RealParam::PiMultiple(q) if (q.numer() % BigInt::from(2)).is_zero() => 1,
        RealParam::PiMultiple(_) => -1,
        RealParam::Rational(_) => 1,
    }
}

/// Subclass of the declared function (never of its truncation).
pub fn classify_subclass(spec: &FunctionSpec) -> Classification {
    let c = |s: Subclass, r: &str| Classification {
        subclass: s,
        reason: r.to_string(),
    };
    if spec.gauss_a.is_negative() {
        return c(Subclass::LaguerrePolyaA, "gaussian factor a < 0");
    }
    if spec.gauss_a.is_positive() {
        return c(Subclass::Outside, "a > 0 is outside the Laguerre-Polya class");
    }
    let mut signs = ZeroSigns::None;
    let mut b = spec.lin_b.clone();
    for z in &spec.product_factors {
        if z.lambda != 0 {
            return c(Subclass::LaguerrePolya0, "a product factor needs exponential convergence factors (lambda = 1)");
        }
        signs = signs.combine(z.signs());
    }
    for f in &spec.classical_factors {
        match f {
            ClassicalFactor::Exp => b += BigRational::one(),
            ClassicalFactor::CosSqrt => signs = signs.combine(ZeroSigns::Positive),
            ClassicalFactor::RecipGamma => {
                return c(Subclass::LaguerrePolya0, "1/Gamma has a genus-one product over its negative zeros")
            }
            ClassicalFactor::CosAffine { angle, .. } => {
                if sine_vanishes(angle) != Some(true) {
                    return c(Subclass::LaguerrePolya0, "cos(phase + z sin(angle)) has zeros of both signs");
                }
            }
            ClassicalFactor::LaguerreFamily { angle, .. } => {
                if sine_vanishes(angle) != Some(true) {
                    return c(Subclass::LaguerrePolya0, "Laguerre's family has zeros of both signs");
                }
                b += BigRational::from_integer(BigInt::from(cos_sign_at_sine_zero(angle)));
            }
        }
    }
    match signs {
        ZeroSigns::Mixed => c(Subclass::LaguerrePolya0, "zeros are not of the same sign"),
        ZeroSigns::Positive if b.is_positive() => c(Subclass::LaguerrePolya0, "positive zeros with b > 0"),
        ZeroSigns::Negative if b.is_negative() => c(Subclass::LaguerrePolya0, "negative zeros with b < 0"),
        _ => c(Subclass::TypeI, "a = 0, genus-zero product, zeros of one sign compatible with b"),
    }
}
