//! Truncated power series `a_0 + a_1 z + ... + a_N z^N`.
//!
//! Invariants:
//!
//! * a series of order `N` stores exactly `N + 1` coefficients;
//! * binary operations return order `min(N_a, N_b)` and never read past it;
//! * on the exact backend every operation is exact.

use crate::error::{Error, Result};
use crate::scalar::{Backend, Ball, Coefficient};
use num_rational::BigRational;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// Pads with zeros or truncates so the result has order `order`.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::from_coeffs(vec![C::one()], order)
    }

    /// `c z^k`, truncated.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn backend(&self) -> Backend {
        self.coeffs[0].backend()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| self.coeffs[i].add_ref(&other.coeffs[i])).collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| self.coeffs[i].sub_ref(&other.coeffs[i])).collect();
        TruncatedSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Cauchy product `c_n = sum_k a_k b_(n-k)`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let nz_a: Vec<usize> = (0..=n).filter(|&i| !self.coeffs[i].is_exact_zero()).collect();
        let mut out = vec![C::zero(); n + 1];
        for (m, slot) in out.iter_mut().enumerate() {
            let mut acc: Option<C> = None;
            for &i in &nz_a {
                if i > m {
                    break;
                }
                let b = &other.coeffs[m - i];
                if b.is_exact_zero() {
                    continue;
                }
                let t = self.coeffs[i].mul_ref(b);
                acc = Some(match acc {
                    None => t,
                    Some(a) => a.add_ref(&t),
                });
            }
            if let Some(a) = acc {
                *slot = a;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![C::zero(); n + 1];
        for i in 0..=n {
            if i + k <= n {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// `exp(s)` via `(n+1) e_(n+1) = sum_(k=0)^n (k+1) s_(k+1) e_(n-k)`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_exact_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let ds: Vec<(usize, C)> = (0..n)
            .filter(|&k| !self.coeffs[k + 1].is_exact_zero())
            .map(|k| (k, self.coeffs[k + 1].mul_int(k as i64 + 1)))
            .collect();
        let mut e = vec![C::zero(); n + 1];
        e[0] = C::one();
        for m in 0..n {
            let mut acc: Option<C> = None;
            for (k, d) in &ds {
                if *k > m {
                    break;
                }
                let prev = &e[m - k];
                if prev.is_exact_zero() {
                    continue;
                }
                let t = d.mul_ref(prev);
                acc = Some(match acc {
                    None => t,
                    Some(a) => a.add_ref(&t),
                });
            }
            if let Some(a) = acc {
                e[m + 1] = a.div_int(m as u64 + 1);
            }
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// `(even, odd)` parts; each keeps the order and zeroes the other parity.
    pub fn even_odd_split(&self) -> (Self, Self) {
        let mut even = self.coeffs.clone();
        let mut odd = self.coeffs.clone();
        for (i, (e, o)) in even.iter_mut().zip(odd.iter_mut()).enumerate() {
            if i % 2 == 0 {
                *o = C::zero();
            } else {
                *e = C::zero();
            }
        }
        (TruncatedSeries { coeffs: even }, TruncatedSeries { coeffs: odd })
    }

    /// Real and imaginary parts of the truncation at `z = i t`:
    /// `(sum (-1)^n a_(2n) t^(2n), sum (-1)^n a_(2n+1) t^(2n+1))`.
    pub fn eval_imaginary(&self, t: &C) -> (C, C) {
        let mut re = C::zero();
        let mut im = C::zero();
        let mut pow = C::one();
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_exact_zero() {
                let term = a.mul_ref(&pow);
                let neg = (i / 2) % 2 == 1;
                let target = if i % 2 == 0 { &mut re } else { &mut im };
                *target = if neg { target.sub_ref(&term) } else { target.add_ref(&term) };
            }
            pow = pow.mul_ref(t);
        }
        (re, im)
    }

    /// True when every odd coefficient is exactly zero.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_exact_zero())
    }

    /// True when every even coefficient is exactly zero.
    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(|c| c.is_exact_zero())
    }
}

impl TruncatedSeries<BigRational> {
    pub fn from_rationals(coeffs: &[BigRational]) -> Self {
        let order = coeffs.len().saturating_sub(1);
        TruncatedSeries::from_coeffs(coeffs.to_vec(), order)
    }

    pub fn to_balls(&self, precision: u32) -> TruncatedSeries<Ball> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|q| Ball::from_rational(q, precision)).collect(),
        }
    }
}

/// Series whose backend is decided at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum AnySeries {
    Exact(TruncatedSeries<BigRational>),
    Approx(TruncatedSeries<Ball>),
}

impl AnySeries {
    pub fn order(&self) -> usize {
        match self {
            AnySeries::Exact(s) => s.order(),
            AnySeries::Approx(s) => s.order(),
        }
    }

    pub fn backend(&self) -> Backend {
        match self {
            AnySeries::Exact(s) => s.backend(),
            AnySeries::Approx(s) => s.backend(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, AnySeries::Exact(_))
    }

    pub fn to_approx(&self, precision: u32) -> TruncatedSeries<Ball> {
        match self {
            AnySeries::Exact(s) => s.to_balls(precision),
            AnySeries::Approx(s) => s.clone(),
        }
    }

    pub fn add(&self, other: &AnySeries) -> Result<AnySeries> {
        match (self, other) {
            (AnySeries::Exact(a), AnySeries::Exact(b)) => Ok(AnySeries::Exact(a.add(b))),
            (AnySeries::Approx(a), AnySeries::Approx(b)) => Ok(AnySeries::Approx(a.add(b))),
            _ => Err(Error::BackendMismatch),
        }
    }

    pub fn mul(&self, other: &AnySeries) -> Result<AnySeries> {
        match (self, other) {
            (AnySeries::Exact(a), AnySeries::Exact(b)) => Ok(AnySeries::Exact(a.mul(b))),
            (AnySeries::Approx(a), AnySeries::Approx(b)) => Ok(AnySeries::Approx(a.mul(b))),
            _ => Err(Error::BackendMismatch),
        }
    }

    pub fn exp(&self) -> Result<AnySeries> {
        match self {
            AnySeries::Exact(a) => a.exp().map(AnySeries::Exact),
            AnySeries::Approx(a) => a.exp().map(AnySeries::Approx),
        }
    }

    /// Product after promoting an exact operand when the other is a ball series.
    pub fn mul_promote(&self, other: &AnySeries, precision: u32) -> AnySeries {
        match (self, other) {
            (AnySeries::Exact(a), AnySeries::Exact(b)) => AnySeries::Exact(a.mul(b)),
            _ => AnySeries::Approx(self.to_approx(precision).mul(&other.to_approx(precision))),
        }
    }
}
