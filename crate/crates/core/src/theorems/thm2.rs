//! `exp(a z^2) P(z)` with `a < 0` and hyperbolic `P` of degree `<= 2m`.
//!
//! Cauchy multiplication gives `c_2k = a^(k-m) P1(k) / k!` and
//! `c_(2k-1) = a^(k-m) P2(k) / (k-1)!`, with
//! `P1(x) = sum_j a^(m-j) b_2j x(x-1)...(x-j+1)` and
//! `P2(x) = sum_j a^(m-1-j) b_(2j+1) (x-1)...(x-j)`. Past the real roots of
//! `P1`, `P2` the pair products are `a^odd` times a positive number.

use crate::error::{Error, Result};
use crate::functions::gaussian_series;
use crate::hyperbolicity::{is_hyperbolic, ExactPolynomial};
use crate::signs::{sign_sequence, tail_check, TailReport};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct Thm2Report {
    pub a: BigRational,
    pub m: usize,
    pub p1: ExactPolynomial,
    pub p2: ExactPolynomial,
    /// `ceil` of the Cauchy bounds of `P1` and `P2` (0 for constants).
    pub k1: usize,
    pub k2: usize,
    pub k0: usize,
    /// `max(2 k0 + 2, 2m + 1)`: every `n > n0Bound` is clean and has `k >= m`.
    pub n0_bound: usize,
    pub horizon: usize,
    pub tail: TailReport,
    /// Last violation within the horizon, 0 when there is none.
    pub empirical_first_clean: usize,
    pub violations_above_bound: Vec<usize>,
    pub odd_identity_checked: usize,
    pub even_identity_checked: usize,
    pub identity_failures: Vec<usize>,
}

impl Thm2Report {
    pub fn bound_valid(&self) -> bool {
        self.violations_above_bound.is_empty() && self.empirical_first_clean <= self.n0_bound
    }

    pub fn identities_hold(&self) -> bool {
        self.identity_failures.is_empty()
    }
}

fn falling(j: usize, shift: i64) -> ExactPolynomial {
    // (x - shift)(x - shift - 1)...(x - shift - j + 1)
    let roots: Vec<BigRational> = (0..j as i64)
        .map(|i| BigRational::from_integer(BigInt::from(shift + i)))
        .collect();
    ExactPolynomial::from_roots(&roots)
}

fn apow(a: &BigRational, e: i64) -> BigRational {
    a.pow(e as i32)
}

/// `(P1, P2, m)` for the coefficients `b_0..b_d` of `P`.
pub fn thm2_polynomials(p: &ExactPolynomial, a: &BigRational) -> (ExactPolynomial, ExactPolynomial, usize) {
    let d = p.degree().unwrap_or(0);
    let m = d.div_ceil(2);
    let mut p1 = ExactPolynomial::zero();
    for j in 0..=m {
        let b = p.coeff(2 * j);
        if !b.is_zero() {
            p1 = p1.add(&falling(j, 0).scale(&(apow(a, (m - j) as i64) * b)));
        }
    }
    let mut p2 = ExactPolynomial::zero();
    for j in 0..m {
        let b = p.coeff(2 * j + 1);
        if !b.is_zero() {
            p2 = p2.add(&falling(j, 1).scale(&(apow(a, m as i64 - 1 - j as i64) * b)));
        }
    }
    (p1, p2, m)
}

fn stable_index(p: &ExactPolynomial) -> Result<usize> {
    if p.is_constant() {
        return Ok(0);
    }
    let b = p.cauchy_bound()?;
    let c = b.numer().div_ceil(b.denom());
    c.to_usize()
        .ok_or_else(|| Error::InvalidArgument("Cauchy bound too large".into()))
}

/// Bound `n0`, exact coefficient check to `horizon`, and both pair identities.
pub fn thm2_n0_bound(p: &ExactPolynomial, a: &BigRational, horizon: usize) -> Result<Thm2Report> {
    if !a.is_negative() {
        return Err(Error::InvalidArgument("a must be negative".into()));
    }
    if !is_hyperbolic(p)?.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    let (p1, p2, m) = thm2_polynomials(p, a);
    let k1 = stable_index(&p1)?;
    let k2 = stable_index(&p2)?;
    let k0 = k1.max(k2);
    let n0_bound = (2 * k0 + 2).max(2 * m + 1);
    let s = gaussian_series(a, &BigRational::zero(), horizon).mul(&p.to_series(horizon));
    let tail = tail_check(&sign_sequence(&s));
    let c = s.coeffs();
    let mut fact = vec![BigInt::one()];
    for k in 1..=horizon / 2 + 1 {
        let f = &fact[k - 1] * BigInt::from(k);
        fact.push(f);
    }
    let mut failures = Vec::new();
    let mut odd = 0;
    let mut even = 0;
    for n in 1..horizon {
        let k = n / 2;
        let lhs = &c[n - 1] * &c[n + 1];
        let rhs = if n % 2 == 1 {
            if k < m {
                continue;
            }
            odd += 1;
            let kk = BigRational::from_integer(BigInt::from(k));
            apow(a, 2 * (k as i64 - m as i64) + 1) * p1.eval(&kk) * p1.eval(&(&kk + BigRational::one()))
                / BigRational::from_integer(&fact[k] * &fact[k + 1])
        } else {
            if k < m.max(1) {
                continue;
            }
            even += 1;
            let kk = BigRational::from_integer(BigInt::from(k));
            apow(a, 2 * (k as i64 - m as i64) + 1) * p2.eval(&kk) * p2.eval(&(&kk + BigRational::one()))
                / BigRational::from_integer(&fact[k - 1] * &fact[k])
        };
        if lhs != rhs {
            failures.push(n);
        }
    }
    Ok(Thm2Report {
        a: a.clone(),
        m,
        k1,
        k2,
        k0,
        n0_bound,
        horizon,
        empirical_first_clean: tail.n0_empirical,
        violations_above_bound: tail.violations_above(n0_bound),
        tail,
        odd_identity_checked: odd,
        even_identity_checked: even,
        identity_failures: failures,
        p1,
        p2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn p(c: &[(i64, i64)]) -> ExactPolynomial {
        ExactPolynomial::new(c.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn constant_polynomial() {
        let r = thm2_n0_bound(&p(&[(1, 1)]), &q(-1, 1), 60).unwrap();
        assert_eq!(r.p1, p(&[(1, 1)]));
        assert!(r.p2.is_zero());
        assert!(r.tail.violations.is_empty());
        assert!(r.bound_valid() && r.identities_hold());
    }

    #[test]
    fn one_minus_z2() {
        let r = thm2_n0_bound(&p(&[(1, 1), (0, 1), (-1, 1)]), &q(-1, 1), 100).unwrap();
        assert!(r.tail.violations.is_empty());
        assert_eq!(r.empirical_first_clean, 0);
        assert!(r.identities_hold());
    }

    #[test]
    fn two_real_zeros() {
        let r = thm2_n0_bound(&p(&[(1, 1), (-3, 2), (1, 2)]), &q(-1, 1), 400).unwrap();
        assert!(r.bound_valid());
        assert!(r.identities_hold());
        assert!(r.odd_identity_checked > 190 && r.even_identity_checked > 190);
    }

    #[test]
    fn guards() {
        assert!(thm2_n0_bound(&p(&[(1, 1), (0, 1), (1, 1)]), &q(-1, 1), 10).is_err());
        assert!(thm2_n0_bound(&p(&[(1, 1)]), &q(0, 1), 10).is_err());
    }
}
