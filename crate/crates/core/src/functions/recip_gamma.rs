//! Maclaurin coefficients of `1/Gamma(z)`.
//!
//! Uses `1/Gamma(z) = z exp((gamma - H_M) z + sum_(k>=2) (-1)^(k-1) t_k z^k / k)
//! prod_(n<=M) (1 + z/n)` with `t_k = sum_(n>M) n^-k`. Each `t_k` is an
//! Euler-Maclaurin sum in exact rationals; since `x^-k` is completely
//! monotone the remainder is bounded by the first omitted correction term,
//! and twice that bound goes into the radius.

use crate::error::{Error, Result};
use crate::scalar::{consts, Ball, Dyadic};
use crate::series::TruncatedSeries;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

const START_M: u64 = 64;
const MAX_M: u64 = 1 << 14;

/// Bernoulli numbers `B_0..=B_n` (with `B_1 = -1/2`).
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        let mut s = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            s += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Enclosure of `sum_(n>M) n^-k` with radius at most about `goal`.
fn tail_power_sum(k: u64, m: u64, goal: &BigRational, bern: &[BigRational], prec: u32) -> Option<Ball> {
    let mr = rat(m);
    let mk = num_traits::pow(mr.clone(), k as usize).recip();
    let integral = &mk * &mr / rat(k - 1);
    if integral < *goal {
        // 0 < t_k < M^(1-k)/(k-1)
        let half = &integral / rat(2);
        let pad = Dyadic::from_rational(&half, 64).0.add_up(&Dyadic::pow2(-(prec as i64) - 8), 64);
        return Some(Ball::from_rational(&half, prec).add_error(&pad));
    }
    let mut sum = &integral - &mk / rat(2);
    let m2 = (&mr * &mr).recip();
    // rising factorial (k)_(2j-1) and M^(-k-2j+1)
    let mut rising = rat(k);
    let mut mpow = &mk / &mr;
    let mut fact = rat(2);
    let mut prev: Option<BigRational> = None;
    let mut j = 1usize;
    loop {
        if 2 * j >= bern.len() {
            return None;
        }
        let term = &bern[2 * j] / &fact * &rising * &mpow;
        let mag = term.abs();
        if let Some(p) = &prev {
            if mag >= *p {
                return None;
            }
        }
        if mag * rat(2) < *goal {
            let bound = term.abs() * rat(2);
            let (d, _) = Dyadic::from_rational(&bound, 64);
            let pad = d.round_up_abs(64).add_up(&Dyadic::pow2(-(prec as i64) - 8), 64);
            return Some(Ball::from_rational(&sum, prec).add_error(&pad));
        }
        sum += &term;
        prev = Some(term.abs());
        let kk = k + 2 * j as u64 - 1;
        rising = rising * rat(kk) * rat(kk + 1);
        mpow = &mpow * &m2;
        fact = fact * rat(2 * j as u64 + 1) * rat(2 * j as u64 + 2);
        j += 1;
    }
}

/// Coefficients `c_0..=c_N` of `1/Gamma(z)` as balls at `precision` bits.
pub fn recip_gamma_series(order: usize, precision: u32) -> Result<TruncatedSeries<Ball>> {
    let limit = consts::constant_precision_limit();
    if precision + 16 > limit {
        return Err(Error::RecipGammaTail(format!(
            "precision {precision} exceeds what the stored constants support ({} bits)",
            limit - 16
        )));
    }
    let wp = precision + 32;
    let goal = BigRational::new(BigInt::one(), BigInt::one() << (precision as usize + 16));
    let bern = bernoulli(200);
    if order == 0 {
        return Ok(TruncatedSeries::zero(0));
    }
    let inner = order - 1;
    let mut m = START_M;
    let tails = loop {
        let mut out = Vec::with_capacity(inner + 1);
        let mut ok = true;
        for k in 2..=inner as u64 {
            match tail_power_sum(k, m, &goal, &bern, wp) {
                Some(t) => out.push(t),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            break out;
        }
        m *= 2;
        if m > MAX_M {
            return Err(Error::RecipGammaTail(format!(
                "Euler-Maclaurin tail did not reach 2^-{} for order {order}",
                precision + 16
            )));
        }
    };
    let harmonic: BigRational = (1..=m).map(|n| rat(n).recip()).sum();
    let gamma = consts::euler_gamma(wp);
    let mut expo = vec![Ball::from_i64(0, wp); inner + 1];
    if inner >= 1 {
        expo[1] = &gamma - &Ball::from_rational(&harmonic, wp);
    }
    for (i, t) in tails.into_iter().enumerate() {
        let k = i + 2;
        let v = t.div_int(k as u64);
        expo[k] = if k % 2 == 0 { -v } else { v };
    }
    let e = TruncatedSeries::from_coeffs(expo, inner).exp()?;
    let recips: Vec<Ball> = (1..=m as i64).map(|n| -Ball::from_rational(&rat(n as u64).recip(), wp)).collect();
    // prod (1 + z/n) = prod (1 - (-1/n) z)
    let p = super::product::linear_product(&recips, inner);
    let body = e.mul(&p);
    let mut c = vec![Ball::from_i64(0, precision)];
    c.extend(body.into_coeffs().into_iter().map(|b| b.set_precision(precision)));
    let tol = Dyadic::pow2(-(precision as i64) + 64);
    if let Some(bad) = c.iter().position(|b| b.rad() > &tol) {
        return Err(Error::RecipGammaTail(format!("coefficient {bad} has error above 2^-{}", precision - 64)));
    }
    Ok(TruncatedSeries::from_coeffs(c, order))
}
