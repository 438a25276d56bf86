//! The named example functions: `exp`, `cos sqrt z`, `1/Gamma`, the affine
//! cosine `cos(phase + z sin(angle))` and Laguerre's family
//! `sum cos(phase + n angle) z^n / n!`.

use super::recip_gamma::recip_gamma_series;
use crate::error::{Error, Result};
use crate::scalar::rational::{parse_rational, render_rational};
use crate::scalar::{consts, Ball};
use crate::series::{AnySeries, TruncatedSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A real parameter that is either rational or a rational multiple of pi.
#[derive(Clone, Debug, PartialEq)]
pub enum RealParam {
    Rational(BigRational),
    PiMultiple(BigRational),
}

impl RealParam {
    pub fn zero() -> Self {
        RealParam::Rational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RealParam::Rational(q) | RealParam::PiMultiple(q) => q.is_zero(),
        }
    }

    pub fn to_ball(&self, prec: u32) -> Ball {
        match self {
            RealParam::Rational(q) => Ball::from_rational(q, prec),
            RealParam::PiMultiple(q) => &consts::pi(prec + 16) * &Ball::from_rational(q, prec + 16),
        }
        .set_precision(prec)
    }

    /// Accepts rationals and `pi`, `pi/3`, `pi*2/3`, `2/3*pi`, `-pi`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.trim().replace('\u{2212}', "-").chars().filter(|c| !c.is_whitespace()).collect();
        if !t.contains("pi") {
            return parse_rational(&t).map(RealParam::Rational);
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.as_str()),
        };
        let coef = if body == "pi" {
            BigRational::one()
        } else if let Some(rest) = body.strip_prefix("pi/") {
            parse_rational(rest)?.recip()
        } else if let Some(rest) = body.strip_prefix("pi*") {
            parse_rational(rest)?
        } else if let Some(rest) = body.strip_suffix("*pi") {
            parse_rational(rest)?
        } else {
            return Err(Error::InvalidArgument(format!("not a real parameter: `{s}`")));
        };
        Ok(RealParam::PiMultiple(if neg { -coef } else { coef }))
    }

    pub fn render(&self) -> String {
        match self {
            RealParam::Rational(q) => render_rational(q),
            RealParam::PiMultiple(q) => format!("pi*{}", render_rational(q)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ClassicalFactor {
    Exp,
    CosSqrt,
    RecipGamma,
    CosAffine { phase: RealParam, angle: RealParam },
    LaguerreFamily { phase: RealParam, angle: RealParam },
}

impl ClassicalFactor {
    pub fn name(&self) -> &'static str {
        match self {
            ClassicalFactor::Exp => "exp",
            ClassicalFactor::CosSqrt => "cos_sqrt",
            ClassicalFactor::RecipGamma => "recip_gamma",
            ClassicalFactor::CosAffine { .. } => "cos_affine",
            ClassicalFactor::LaguerreFamily { .. } => "laguerre_family",
        }
    }

    /// Builds a factor from its name and (phase, angle) where relevant.
    pub fn from_name(name: &str, phase: Option<RealParam>, angle: Option<RealParam>) -> Result<Self> {
        let pa = || (phase.clone().unwrap_or_else(RealParam::zero), angle.clone().unwrap_or_else(RealParam::zero));
        Ok(match name {
            "exp" => ClassicalFactor::Exp,
            "cos_sqrt" => ClassicalFactor::CosSqrt,
            "recip_gamma" => ClassicalFactor::RecipGamma,
            "cos_affine" => {
                let (phase, angle) = pa();
                ClassicalFactor::CosAffine { phase, angle }
            }
            "laguerre_family" => {
                let (phase, angle) = pa();
                ClassicalFactor::LaguerreFamily { phase, angle }
            }
            other => return Err(Error::UnknownFactor(other.to_string())),
        })
    }

    pub fn is_exact(&self) -> bool {
        match self {
            ClassicalFactor::Exp | ClassicalFactor::CosSqrt => true,
            ClassicalFactor::RecipGamma => false,
            ClassicalFactor::CosAffine { phase, angle } => phase.is_zero() && angle.is_zero(),
            ClassicalFactor::LaguerreFamily { phase, angle } => phase.is_zero() && angle.is_zero(),
        }
    }
}

fn factorial_recips(order: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut f = BigInt::one();
    out.push(BigRational::one());
    for n in 1..=order {
        f *= n;
        out.push(BigRational::new(BigInt::one(), f.clone()));
    }
    out
}

/// `cos(phase + z s)` with `s = sin(angle)`.
fn cos_affine(phase: &Ball, s: &Ball, order: usize, prec: u32) -> TruncatedSeries<Ball> {
    let (sp, cp) = phase.sin_cos();
    let mut c = Vec::with_capacity(order + 1);
    let mut t = Ball::from_i64(1, prec);
    for n in 0..=order {
        if n > 0 {
            t = (&t * s).div_int(n as u64);
        }
        let v = match n % 4 {
            0 => &cp * &t,
            1 => -(&sp * &t),
            2 => -(&cp * &t),
            _ => &sp * &t,
        };
        c.push(v);
    }
    TruncatedSeries::from_coeffs(c, order)
}

/// Coefficients of the named factor truncated at `order`.
pub fn classical_series(f: &ClassicalFactor, order: usize, precision: u32) -> Result<AnySeries> {
    Ok(match f {
        ClassicalFactor::Exp => AnySeries::Exact(TruncatedSeries::from_coeffs(factorial_recips(order), order)),
        ClassicalFactor::CosSqrt => {
            let f = factorial_recips(2 * order);
            let c = (0..=order)
                .map(|n| if n % 2 == 0 { f[2 * n].clone() } else { -f[2 * n].clone() })
                .collect();
            AnySeries::Exact(TruncatedSeries::from_coeffs(c, order))
        }
        ClassicalFactor::RecipGamma => AnySeries::Approx(recip_gamma_series(order, precision)?),
        ClassicalFactor::CosAffine { phase, angle } => {
            if f.is_exact() {
                return Ok(AnySeries::Exact(TruncatedSeries::one(order)));
            }
            let wp = precision + 32;
            let s = angle.to_ball(wp).sin();
            let c = cos_affine(&phase.to_ball(wp), &s, order, wp);
            AnySeries::Approx(round_all(c, precision))
        }
        ClassicalFactor::LaguerreFamily { phase, angle } => {
            if f.is_exact() {
                return Ok(AnySeries::Exact(TruncatedSeries::from_coeffs(factorial_recips(order), order)));
            }
            let wp = precision + 32;
            let ph = phase.to_ball(wp);
            let an = angle.to_ball(wp);
            let f = factorial_recips(order);
            let c = (0..=order)
                .map(|n| {
                    let arg = &ph + &an.mul_int(n as i64);
                    (&arg.cos() * &Ball::from_rational(&f[n], wp)).set_precision(precision)
                })
                .collect();
            AnySeries::Approx(TruncatedSeries::from_coeffs(c, order))
        }
    })
}

fn round_all(s: TruncatedSeries<Ball>, precision: u32) -> TruncatedSeries<Ball> {
    let n = s.order();
    TruncatedSeries::from_coeffs(s.into_coeffs().into_iter().map(|b| b.set_precision(precision)).collect(), n)
}

/// `exp(z cos(angle)) cos(phase + z sin(angle))`, the closed form of Laguerre's family.
pub fn laguerre_product_form(phase: &RealParam, angle: &RealParam, order: usize, precision: u32) -> TruncatedSeries<Ball> {
    let wp = precision + 32;
    let an = angle.to_ball(wp);
    let (s, c) = an.sin_cos();
    let mut e = Vec::with_capacity(order + 1);
    let mut t = Ball::from_i64(1, wp);
    for n in 0..=order {
        if n > 0 {
            t = (&t * &c).div_int(n as u64);
        }
        e.push(t.clone());
    }
    let e = TruncatedSeries::from_coeffs(e, order);
    let p = cos_affine(&phase.to_ball(wp), &s, order, wp);
    round_all(e.mul(&p), precision)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn cos_sqrt_example() {
        match classical_series(&ClassicalFactor::CosSqrt, 3, 64).unwrap() {
            AnySeries::Exact(s) => assert_eq!(s.coeffs(), &[q(1, 1), q(-1, 2), q(1, 24), q(-1, 720)]),
            _ => panic!(),
        }
    }

    #[test]
    fn laguerre_family_values() {
        let f = ClassicalFactor::LaguerreFamily {
            phase: RealParam::Rational(q(1, 2)),
            angle: RealParam::Rational(q(2, 1)),
        };
        let s = match classical_series(&f, 10, 128).unwrap() {
            AnySeries::Approx(s) => s,
            _ => panic!(),
        };
        let mut fact = 1.0;
        for n in 0..=10 {
            if n > 0 {
                fact *= n as f64;
            }
            let want = (0.5 + 2.0 * n as f64).cos() / fact;
            assert!((s.coeff(n).to_f64() - want).abs() < 1e-15);
        }
    }

    #[test]
    fn identity_with_product_form() {
        let phase = RealParam::Rational(q(1, 1));
        let angle = RealParam::parse("pi/3").unwrap();
        let lhs = laguerre_product_form(&phase, &angle, 30, 128);
        let f = ClassicalFactor::LaguerreFamily { phase, angle };
        let rhs = match classical_series(&f, 30, 128).unwrap() {
            AnySeries::Approx(s) => s,
            _ => panic!(),
        };
        for n in 0..=30 {
            assert!(lhs.coeff(n).overlaps(rhs.coeff(n)), "n = {n}");
        }
    }

    #[test]
    fn real_param_grammar() {
        assert_eq!(RealParam::parse("pi").unwrap(), RealParam::PiMultiple(q(1, 1)));
        assert_eq!(RealParam::parse("pi/3").unwrap(), RealParam::PiMultiple(q(1, 3)));
        assert_eq!(RealParam::parse("-pi*2/3").unwrap(), RealParam::PiMultiple(q(-2, 3)));
        assert_eq!(RealParam::parse("2/3*pi").unwrap(), RealParam::PiMultiple(q(2, 3)));
        assert_eq!(RealParam::parse("1/2").unwrap(), RealParam::Rational(q(1, 2)));
        let p = RealParam::PiMultiple(q(1, 3));
        assert_eq!(RealParam::parse(&p.render()).unwrap(), p);
        assert!(RealParam::parse("tau").is_err());
        assert_eq!(ClassicalFactor::from_name("bessel", None, None), Err(Error::UnknownFactor("bessel".into())));
    }
}
