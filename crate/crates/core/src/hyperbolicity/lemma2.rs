//! Purely imaginary zeros of the even and odd parts of a same-sign hyperbolic polynomial.
//!
//! With `p(z) = E(z^2) + z O(z^2)`, the zeros of `E(z^2)` are purely
//! imaginary iff `E_u(u) = sum (-1)^n a_2n u^n` has only real roots `u >= 0`
//! (substitute `z = i y`, `u = y^2`); likewise for `O`.

use super::certify::{is_hyperbolic, CertifiedRoot, Hyperbolicity};
use super::poly::ExactPolynomial;
use crate::error::{Error, Result};
use num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartCheck {
    /// The polynomial in `u`.
    pub u_poly: ExactPolynomial,
    pub roots: Vec<CertifiedRoot<BigRational>>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2Report {
    pub base: ExactPolynomial,
    pub zero_sign: i32,
    pub even: PartCheck,
    pub odd: PartCheck,
}

impl Lemma2Report {
    pub fn pass(&self) -> bool {
        self.even.pass && self.odd.pass
    }
}

fn part(p: &ExactPolynomial, offset: usize) -> ExactPolynomial {
    ExactPolynomial::new(
        p.coeffs()
            .iter()
            .skip(offset)
            .step_by(2)
            .enumerate()
            .map(|(n, a)| if n % 2 == 0 { a.clone() } else { -a.clone() })
            .collect(),
    )
}

fn check_part(u: ExactPolynomial) -> Result<PartCheck> {
    if u.is_constant() {
        return Ok(PartCheck {
            u_poly: u,
            roots: Vec::new(),
            pass: true,
        });
    }
    Ok(match is_hyperbolic(&u)? {
        Hyperbolicity::Hyperbolic(h) => PartCheck {
            pass: h.roots_nonnegative(),
            roots: h.roots,
            u_poly: u,
        },
        Hyperbolicity::NotHyperbolic(r) => PartCheck {
            u_poly: u,
            roots: r.roots,
            pass: false,
        },
    })
}

/// Requires a hyperbolic `p` whose nonzero roots share one sign.
pub fn even_odd_imaginary_check(p: &ExactPolynomial) -> Result<Lemma2Report> {
    let h = is_hyperbolic(p)?.certificate().ok_or(Error::NotHyperbolic)?;
    let zero_sign = h
        .same_sign
        .ok_or_else(|| Error::Precondition("zeros of mixed sign".into()))?;
    Ok(Lemma2Report {
        base: p.clone(),
        zero_sign,
        even: check_part(part(p, 0))?,
        odd: check_part(part(p, 1))?,
    })
}
