//! Truncated canonical products `prod (1 - z/x_n) exp(lambda z / x_n)`.

use super::zeros::{ZeroKind, ZeroSequence};
use crate::error::Result;
use crate::scalar::Coefficient;
use crate::series::{AnySeries, TruncatedSeries};
use num_rational::BigRational;

/// `prod (1 - r z)` over the given reciprocals.
pub fn linear_product<C: Coefficient>(recips: &[C], order: usize) -> TruncatedSeries<C> {
    let mut c = vec![C::zero(); order + 1];
    c[0] = C::one();
    for (done, r) in recips.iter().enumerate() {
        let top = (done + 1).min(order);
        for n in (1..=top).rev() {
            if !c[n - 1].is_exact_zero() {
                c[n] = c[n].sub_ref(&c[n - 1].mul_ref(r));
            }
        }
    }
    TruncatedSeries::from_coeffs(c, order)
}

/// `prod (1 - s z^2)` over the given squared reciprocals.
pub fn pair_product<C: Coefficient>(recip_sq: &[C], order: usize) -> TruncatedSeries<C> {
    let mut c = vec![C::zero(); order + 1];
    c[0] = C::one();
    for (done, s) in recip_sq.iter().enumerate() {
        let top = (2 * (done + 1)).min(order);
        for n in (2..=top).rev().filter(|n| n % 2 == 0) {
            c[n] = c[n].sub_ref(&c[n - 2].mul_ref(s));
        }
    }
    TruncatedSeries::from_coeffs(c, order)
}

/// `exp(s z)` as `s^n / n!`.
pub fn exp_linear<C: Coefficient>(s: &C, order: usize) -> TruncatedSeries<C> {
    let mut c = Vec::with_capacity(order + 1);
    let mut t = C::one();
    c.push(t.clone());
    for n in 1..=order {
        t = t.mul_ref(s).div_int(n as u64);
        c.push(t.clone());
    }
    TruncatedSeries::from_coeffs(c, order)
}

fn assemble<C: Coefficient>(recips: &[C], lambda: u8, symmetric_pairs: bool, order: usize) -> TruncatedSeries<C> {
    if symmetric_pairs {
        // (1 - z/y)(1 + z/y) = 1 - z^2/y^2; the exponential factors cancel pairwise
        let sq: Vec<C> = recips.chunks(2).map(|p| p[1].mul_ref(&p[1])).collect();
        return pair_product(&sq, order);
    }
    let p = linear_product(recips, order);
    if lambda == 0 {
        return p;
    }
    let sum = recips.iter().fold(C::zero(), |a, r| a.add_ref(r));
    if sum.is_exact_zero() {
        return p;
    }
    p.mul(&exp_linear(&sum, order))
}

/// Truncated canonical product over the materialized zeros.
///
/// Exact when every zero is rational, otherwise a ball series at `precision`.
pub fn canonical_product_series(zeros: &ZeroSequence, order: usize, precision: u32) -> Result<AnySeries> {
    zeros.validate()?;
    let pairs = matches!(zeros.kind, ZeroKind::PowerLog { .. });
    if let Some(xs) = zeros.materialize_exact() {
        let recips: Vec<BigRational> = xs.iter().map(|x| x.recip()).collect();
        return Ok(AnySeries::Exact(assemble(&recips, zeros.lambda, pairs, order)));
    }
    let recips = zeros.reciprocal_balls(precision);
    Ok(AnySeries::Approx(assemble(&recips, zeros.lambda, pairs, order)))
}
