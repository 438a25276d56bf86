//! Sturm sequences and exact root isolation.

use super::poly::{sign_of, Field, Polynomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound<F> {
    NegInf,
    Finite(F),
    PosInf,
}

impl<F: Field> Bound<F> {
    fn below(&self, o: &Bound<F>) -> bool {
        match (self, o) {
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, _) => false,
            (Bound::NegInf, _) | (_, Bound::PosInf) => true,
            (Bound::Finite(_), Bound::NegInf) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
        }
    }
}

/// `p, p', -rem(p, p'), ...` down to the last nonzero remainder.
pub fn sturm_sequence<F: Field>(p: &Polynomial<F>) -> Result<Vec<Polynomial<F>>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq[seq.len() - 1].is_zero() {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1])?.1;
        seq.push(r.neg());
    }
    seq.pop();
    Ok(seq)
}

fn sign_changes<F: Field>(seq: &[Polynomial<F>], at: &Bound<F>) -> usize {
    let signs = seq.iter().map(|q| match at {
        Bound::NegInf => q.sign_at_infinity(true),
        Bound::PosInf => q.sign_at_infinity(false),
        Bound::Finite(x) => q.sign_at(x),
    });
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn check_endpoint<F: Field>(p: &Polynomial<F>, b: &Bound<F>) -> Result<()> {
    if let Bound::Finite(x) = b {
        if p.eval(x).is_zero() {
            return Err(Error::EndpointRoot(x.to_string()));
        }
    }
    Ok(())
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count<F: Field>(p: &Polynomial<F>, lo: &Bound<F>, hi: &Bound<F>) -> Result<usize> {
    let seq = sturm_sequence(p)?;
    count_with(&seq, lo, hi)
}

fn count_with<F: Field>(seq: &[Polynomial<F>], lo: &Bound<F>, hi: &Bound<F>) -> Result<usize> {
    if !lo.below(hi) {
        return Err(Error::InvalidArgument("interval must satisfy lo < hi".into()));
    }
    check_endpoint(&seq[0], lo)?;
    check_endpoint(&seq[0], hi)?;
    Ok(sign_changes(seq, lo).saturating_sub(sign_changes(seq, hi)))
}

/// An isolating interval; `lo == hi` marks an exact rational root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval<F> {
    pub lo: F,
    pub hi: F,
}

impl<F: Field> RootInterval<F> {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Sign of the enclosed root; intervals never straddle 0.
    pub fn sign(&self) -> i32 {
        sign_of(&(self.lo.clone() + self.hi.clone()))
    }
}

/// Disjoint isolating intervals for the distinct real roots of `p`, increasing.
///
/// Open intervals have non-root rational endpoints; a root met at a bisection
/// point is split off by shifting the point by a power of 1/2.
pub fn isolate_roots<F: Field>(p: &Polynomial<F>) -> Result<Vec<RootInterval<F>>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = p.square_free_part()?;
    if s.is_constant() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let zero_root = s.eval(&F::zero()).is_zero();
    // s is square-free, so dividing out x leaves a polynomial nonzero at 0
    let core = if zero_root { s.div_rem(&Polynomial::x())?.0 } else { s.clone() };
    let b = core.cauchy_bound()?;
    let seq = sturm_sequence(&core)?;
    let neg = F::zero() - b.clone();
    if !core.is_constant() {
        bisect(&core, &seq, neg, F::zero(), &mut out)?;
    }
    if zero_root {
        out.push(RootInterval { lo: F::zero(), hi: F::zero() });
    }
    if !core.is_constant() {
        bisect(&core, &seq, F::zero(), b, &mut out)?;
    }
    Ok(out)
}

fn bisect<F: Field>(p: &Polynomial<F>, seq: &[Polynomial<F>], lo: F, hi: F, out: &mut Vec<RootInterval<F>>) -> Result<()> {
    let n = count_with(seq, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))?;
    if n == 0 {
        return Ok(());
    }
    if n == 1 {
        out.push(RootInterval { lo, hi });
        return Ok(());
    }
    let two = F::one() + F::one();
    let width = hi.clone() - lo.clone();
    let mut mid = (lo.clone() + hi.clone()) / two.clone();
    let mut step = width / (two.clone() * two.clone());
    while p.eval(&mid).is_zero() {
        step = step / two.clone();
        mid = mid + step.clone();
    }
    bisect(p, seq, lo, mid.clone(), out)?;
    bisect(p, seq, mid, hi, out)
}

/// Whether `p` vanishes inside the isolating interval.
pub fn root_in<F: Field>(p: &Polynomial<F>, iv: &RootInterval<F>) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if iv.is_exact() {
        return Ok(p.eval(&iv.lo).is_zero());
    }
    // roots sitting on an endpoint are outside the open interval
    let mut f = p.clone();
    for e in [&iv.lo, &iv.hi] {
        while f.eval(e).is_zero() {
            let lin = Polynomial::new(vec![F::zero() - e.clone(), F::one()]);
            f = f.div_rem(&lin)?.0;
        }
    }
    Ok(sturm_count(&f, &Bound::Finite(iv.lo.clone()), &Bound::Finite(iv.hi.clone()))? > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolicity::ExactPolynomial;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn p(c: &[i64]) -> ExactPolynomial {
        Polynomial::new(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn counts() {
        let all = (Bound::NegInf, Bound::PosInf);
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), &all.0, &all.1).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &all.0, &all.1).unwrap(), 0);
        let c = p(&[0, -3, 0, 1]);
        assert_eq!(sturm_count(&c, &Bound::Finite(q(-2)), &Bound::Finite(q(2))).unwrap(), 3);
        assert_eq!(sturm_count(&p(&[1, 2, 1]), &all.0, &all.1).unwrap(), 1);
        assert!(matches!(sturm_count(&ExactPolynomial::zero(), &all.0, &all.1), Err(Error::ZeroPolynomial)));
        assert!(matches!(
            sturm_count(&c, &Bound::Finite(q(0)), &Bound::Finite(q(2))),
            Err(Error::EndpointRoot(_))
        ));
    }

    #[test]
    fn isolation() {
        let a = ExactPolynomial::from_roots(&[q(0), q(1), q(2), q(3), q(-4), q(1)]);
        let iv = isolate_roots(&a).unwrap();
        assert_eq!(iv.len(), 5);
        let roots = [q(-4), q(0), q(1), q(2), q(3)];
        for (i, r) in iv.iter().zip(roots.iter()) {
            assert!(i.lo <= *r && *r <= i.hi);
        }
        for w in iv.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        assert_eq!(iv[1], RootInterval { lo: q(0), hi: q(0) });
        assert!(isolate_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }
}
