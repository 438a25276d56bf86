//! Real-rootedness certificates.

use super::poly::{Field, Polynomial};
use super::sturm::{isolate_roots, root_in, RootInterval};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedRoot<F> {
    pub interval: RootInterval<F>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicPolynomial<F> {
    pub base: Polynomial<F>,
    /// Distinct real roots in increasing order.
    pub roots: Vec<CertifiedRoot<F>>,
    /// `Some(1)` / `Some(-1)` when every nonzero root has that sign
    /// (roots at the origin allowed), `Some(0)` when there are no nonzero
    /// roots, `None` for mixed signs.
    pub same_sign: Option<i32>,
}

impl<F: Field> HyperbolicPolynomial<F> {
    pub fn degree(&self) -> usize {
        self.base.degree().unwrap_or(0)
    }

    pub fn root_count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Whether every root is `>= 0`.
    pub fn roots_nonnegative(&self) -> bool {
        self.roots.iter().all(|r| r.interval.sign() >= 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation<F> {
    pub base: Polynomial<F>,
    pub degree: usize,
    /// Real roots counted with multiplicity.
    pub real_roots: usize,
    pub deficit: usize,
    pub roots: Vec<CertifiedRoot<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hyperbolicity<F> {
    Hyperbolic(HyperbolicPolynomial<F>),
    NotHyperbolic(Refutation<F>),
}

impl<F: Field> Hyperbolicity<F> {
    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, Hyperbolicity::Hyperbolic(_))
    }

    pub fn certificate(self) -> Option<HyperbolicPolynomial<F>> {
        match self {
            Hyperbolicity::Hyperbolic(h) => Some(h),
            Hyperbolicity::NotHyperbolic(_) => None,
        }
    }
}

/// Isolated real roots with multiplicities from the square-free decomposition.
pub fn real_roots<F: Field>(p: &Polynomial<F>) -> Result<Vec<CertifiedRoot<F>>> {
    let factors = p.square_free_decomposition()?;
    let intervals = isolate_roots(p)?;
    intervals
        .into_iter()
        .map(|iv| {
            let mut m = 0;
            for (f, i) in &factors {
                if root_in(f, &iv)? {
                    m = *i;
                    break;
                }
            }
            Ok(CertifiedRoot { interval: iv, multiplicity: m })
        })
        .collect()
}

/// Accepts iff the real roots, counted with multiplicity, number `deg p`.
pub fn is_hyperbolic<F: Field>(p: &Polynomial<F>) -> Result<Hyperbolicity<F>> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let roots = real_roots(p)?;
    let real: usize = roots.iter().map(|r| r.multiplicity).sum();
    if real < degree {
        return Ok(Hyperbolicity::NotHyperbolic(Refutation {
            base: p.clone(),
            degree,
            real_roots: real,
            deficit: degree - real,
            roots,
        }));
    }
    let signs: Vec<i32> = roots.iter().map(|r| r.interval.sign()).filter(|&s| s != 0).collect();
    let same_sign = if signs.is_empty() {
        Some(0)
    } else if signs.iter().all(|&s| s == signs[0]) {
        Some(signs[0])
    } else {
        None
    };
    Ok(Hyperbolicity::Hyperbolic(HyperbolicPolynomial {
        base: p.clone(),
        roots,
        same_sign,
    }))
}
