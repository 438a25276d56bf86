//! Dense univariate polynomials over an exact ordered field.

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};
use std::fmt::{Debug, Display};

/// Exact ordered field: rationals in practice.
pub trait Field: Clone + Debug + Display + Ord + Num + Signed + FromPrimitive + Send + Sync {}

impl<T: Clone + Debug + Display + Ord + Num + Signed + FromPrimitive + Send + Sync> Field for T {}

/// Coefficients `c_0..c_d` with `c_d != 0`; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<F> {
    c: Vec<F>,
}

pub type ExactPolynomial = Polynomial<BigRational>;

impl<F: Field> Polynomial<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Polynomial { c }
    }

    pub fn zero() -> Self {
        Polynomial { c: Vec::new() }
    }

    pub fn constant(a: F) -> Self {
        Self::new(vec![a])
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    /// `prod (x - r)`.
    pub fn from_roots(roots: &[F]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| acc.mul(&Self::new(vec![-r.clone(), F::one()])))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn lead(&self) -> Option<&F> {
        self.c.last()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn eval(&self, x: &F) -> F {
        self.c.iter().rev().fold(F::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    pub fn sign_at(&self, x: &F) -> i32 {
        sign_of(&self.eval(x))
    }

    /// Sign as `x -> +inf` (or `-inf` when `neg`).
    pub fn sign_at_infinity(&self, neg: bool) -> i32 {
        match (self.lead(), self.degree()) {
            (None, _) => 0,
            (Some(l), Some(d)) => {
                let s = sign_of(l);
                if neg && d % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.clone() * F::from_usize(i).unwrap())
                .collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            c: self.c.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::new(self.c.iter().map(|a| a.clone() * k.clone()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder; errors on division by zero.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.lead().ok_or(Error::ZeroPolynomial)?.clone();
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = r[k + dd].clone() / dl.clone();
            if !t.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - t.clone() * b.clone();
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => {
                let l = l.clone();
                Self::new(self.c.iter().map(|a| a.clone() / l.clone()).collect())
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: `(f_i, i)` with `p = lead * prod f_i^i`,
    /// each `f_i` monic and square-free, pairwise coprime. Constant factors are omitted.
    pub fn square_free_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_rem(&a0)?.0;
        let mut c = d.div_rem(&a0)?.0;
        let mut dd = c.sub(&b.derivative());
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&dd);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a)?.0;
            c = dd.div_rem(&a)?.0;
            dd = c.sub(&b.derivative());
            i += 1;
        }
        Ok(out)
    }

    /// `p / gcd(p, p')`, monic.
    pub fn square_free_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g)?.0.monic())
    }

    /// Cauchy bound `1 + max |c_i / c_d|`: every root has strictly smaller modulus.
    pub fn cauchy_bound(&self) -> Result<F> {
        let l = self.lead().ok_or(Error::ZeroPolynomial)?.clone();
        let m = self.c[..self.c.len() - 1]
            .iter()
            .map(|a| (a.clone() / l.clone()).abs())
            .max()
            .unwrap_or_else(F::zero);
        Ok(F::one() + m)
    }

    /// Number of leading zero coefficients (multiplicity of the root at 0).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.c.iter().take_while(|a| a.is_zero()).count()
    }
}

impl ExactPolynomial {
    pub fn from_series(s: &TruncatedSeries<BigRational>) -> Self {
        Self::new(s.coeffs().to_vec())
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries<BigRational> {
        TruncatedSeries::from_coeffs(self.c.clone(), order)
    }

    pub fn render(&self) -> Vec<String> {
        self.c.iter().map(crate::scalar::rational::render_rational).collect()
    }
}

pub(crate) fn sign_of<F: Field>(x: &F) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
