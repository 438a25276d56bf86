//! Hermite-Biehler interlacing for `u + i v`.

use super::certify::is_hyperbolic;
use super::poly::ExactPolynomial;
use super::sturm::{isolate_roots, root_in};
use crate::error::{Error, Result};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlaceVerdict {
    pub interlace: bool,
    pub reason: String,
}

fn verdict(interlace: bool, reason: &str) -> Result<InterlaceVerdict> {
    Ok(InterlaceVerdict {
        interlace,
        reason: reason.to_string(),
    })
}

/// True iff `u`, `v` are hyperbolic with strictly interlacing zeros.
///
/// Common real zeros give `false`. With one part identically zero the
/// verdict is `true` only when the other part is a nonzero constant.
pub fn hermite_biehler_check(u: &ExactPolynomial, v: &ExactPolynomial) -> Result<InterlaceVerdict> {
    if u.is_zero() && v.is_zero() {
        return Err(Error::Precondition("u and v are both zero".into()));
    }
    if u.is_zero() || v.is_zero() {
        let other = if u.is_zero() { v } else { u };
        return if other.is_constant() {
            verdict(true, "u + iv is a nonzero constant")
        } else {
            verdict(false, "one part vanishes, so the zeros of u + iv are real")
        };
    }
    if !is_hyperbolic(u)?.is_hyperbolic() {
        return verdict(false, "u is not hyperbolic");
    }
    if !is_hyperbolic(v)?.is_hyperbolic() {
        return verdict(false, "v is not hyperbolic");
    }
    if !u.gcd(v).is_constant() {
        return verdict(false, "u and v share a real zero");
    }
    if !u.gcd(&u.derivative()).is_constant() || !v.gcd(&v.derivative()).is_constant() {
        return verdict(false, "repeated zero");
    }
    let labels = isolate_roots(&u.mul(v))?
        .iter()
        .map(|iv| root_in(u, iv))
        .collect::<Result<Vec<bool>>>()?;
    if labels.windows(2).all(|w| w[0] != w[1]) {
        verdict(true, "zeros strictly interlace")
    } else {
        verdict(false, "zeros do not alternate")
    }
}

/// Real and imaginary coefficient parts of `prod (z - r)`.
pub fn from_complex_roots(roots: &[Complex<BigRational>]) -> (ExactPolynomial, ExactPolynomial) {
    let mut c: Vec<Complex<BigRational>> = vec![Complex::one()];
    for r in roots {
        let mut next = vec![Complex::zero(); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] = &next[i + 1] + a;
            next[i] = &next[i] - a * r;
        }
        c = next;
    }
    (
        ExactPolynomial::new(c.iter().map(|z| z.re.clone()).collect()),
        ExactPolynomial::new(c.iter().map(|z| z.im.clone()).collect()),
    )
}
