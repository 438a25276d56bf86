//! Coefficient-wise multipliers `a_n -> gamma_n a_n` and a two-sided test.
//!
//! A single non-hyperbolic image refutes the multiplier property. Passing
//! every sample only shows consistency at the tested scale.

use super::certify::{is_hyperbolic, Hyperbolicity};
use super::poly::ExactPolynomial;
use super::random::{rng, same_sign_roots};
use crate::error::{Error, Result};
use crate::growth::{order_estimate, GrowthEstimate, Window};
use crate::series::TruncatedSeries;
use crate::signs::{sign_sequence, SignSequence};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::fmt;
use std::sync::Arc;

type Rule = Arc<dyn Fn(usize) -> BigRational + Send + Sync>;

#[derive(Clone)]
pub enum Gamma {
    List(Vec<BigRational>),
    Rule(Rule),
}

#[derive(Clone)]
pub struct MultiplierSequence {
    pub gamma: Gamma,
    pub note: String,
}

impl fmt::Debug for MultiplierSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiplierSequence").field("note", &self.note).finish()
    }
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MultiplierSequence {
    pub fn from_list(v: Vec<BigRational>, note: &str) -> Self {
        MultiplierSequence {
            gamma: Gamma::List(v),
            note: note.into(),
        }
    }

    pub fn from_rule(f: impl Fn(usize) -> BigRational + Send + Sync + 'static, note: &str) -> Self {
        MultiplierSequence {
            gamma: Gamma::Rule(Arc::new(f)),
            note: note.into(),
        }
    }

    /// `gamma_n = 1`.
    pub fn ones() -> Self {
        Self::from_rule(|_| BigRational::one(), "1")
    }

    /// `gamma_n = n + 1`.
    pub fn n_plus_one() -> Self {
        Self::from_rule(|n| int(n as u64 + 1), "n+1")
    }

    /// `gamma_n = (-1)^n n!`.
    pub fn alternating_factorial() -> Self {
        Self::from_rule(
            |n| {
                let f = (1..=n as u64).fold(BigInt::one(), |a, k| a * k);
                let f = BigRational::from_integer(f);
                if n % 2 == 0 {
                    f
                } else {
                    -f
                }
            },
            "(-1)^n n!",
        )
    }

    /// Parses `1`, `n+1`, `(-1)^n n!`, `n`, `(-1)^n` or a comma-separated list.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Ok(match t.as_str() {
            "1" | "ones" => Self::ones(),
            "n+1" => Self::n_plus_one(),
            "n" => Self::from_rule(|n| int(n as u64), "n"),
            "(-1)^n" => Self::from_rule(|n| if n % 2 == 0 { int(1) } else { -int(1) }, "(-1)^n"),
            "(-1)^nn!" | "(-1)^n*n!" | "alternating_factorial" => Self::alternating_factorial(),
            _ => {
                let v = t
                    .split(',')
                    .map(crate::scalar::rational::parse_rational)
                    .collect::<Result<Vec<_>>>()
                    .map_err(|_| Error::InvalidArgument(format!("unknown multiplier sequence `{s}`")))?;
                Self::from_list(v, &t)
            }
        })
    }

    pub fn get(&self, n: usize) -> Option<BigRational> {
        match &self.gamma {
            Gamma::List(v) => v.get(n).cloned(),
            Gamma::Rule(f) => Some(f(n)),
        }
    }

    /// `None` for rules (unbounded).
    pub fn available(&self) -> Option<usize> {
        match &self.gamma {
            Gamma::List(v) => Some(v.len()),
            Gamma::Rule(_) => None,
        }
    }

    fn require(&self, needed: usize) -> Result<()> {
        match self.available() {
            Some(a) if a < needed => Err(Error::SequenceTooShort { needed, available: a }),
            _ => Ok(()),
        }
    }
}

/// Coefficient-wise product `a_n gamma_n`.
pub fn apply_multiplier(seq: &MultiplierSequence, p: &ExactPolynomial) -> Result<ExactPolynomial> {
    seq.require(p.coeffs().len())?;
    Ok(ExactPolynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(n, a)| a * seq.get(n).expect("checked length"))
            .collect(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierRefutation {
    pub sample: usize,
    pub input: ExactPolynomial,
    pub image: ExactPolynomial,
    pub deficit: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplierVerdict {
    Refuted,
    /// No refutation among the samples.
    Consistent,
}

impl MultiplierVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            MultiplierVerdict::Refuted => "refuted",
            MultiplierVerdict::Consistent => "consistent up to tested scale",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MultiplierReport {
    pub note: String,
    pub samples_tested: usize,
    pub refutation: Option<MultiplierRefutation>,
    pub verdict: MultiplierVerdict,
    pub test_series: TruncatedSeries<BigRational>,
    pub test_signs: SignSequence,
    pub growth: Option<GrowthEstimate>,
}

/// `sum gamma_n z^n / n!` truncated at `order`.
pub fn test_series(seq: &MultiplierSequence, order: usize) -> Result<TruncatedSeries<BigRational>> {
    seq.require(order + 1)?;
    let mut f = BigInt::one();
    let c = (0..=order)
        .map(|n| {
            if n > 0 {
                f *= n;
            }
            seq.get(n).unwrap() / BigRational::from_integer(f.clone())
        })
        .collect();
    Ok(TruncatedSeries::from_coeffs(c, order))
}

/// Applies `seq` to `sample_count` seeded same-sign hyperbolic polynomials of
/// degree `<= max_deg` and builds the test series to `order`.
pub fn multiplier_sequence_test(
    seq: &MultiplierSequence,
    sample_count: usize,
    max_deg: usize,
    order: usize,
    seed: u64,
) -> Result<MultiplierReport> {
    seq.require(max_deg.max(order) + 1)?;
    let mut r = rng(seed);
    let mut refutation = None;
    let mut tested = 0;
    for i in 0..sample_count {
        let (p, _) = same_sign_roots(&mut r, max_deg, false);
        tested += 1;
        let image = apply_multiplier(seq, &p)?;
        if image.is_zero() {
            continue;
        }
        if let Hyperbolicity::NotHyperbolic(rf) = is_hyperbolic(&image)? {
            refutation = Some(MultiplierRefutation {
                sample: i,
                input: p,
                image,
                deficit: rf.deficit,
            });
            break;
        }
    }
    let s = test_series(seq, order)?;
    let growth = Window::tail(order).ok().and_then(|w| order_estimate(&s, w).ok());
    Ok(MultiplierReport {
        note: seq.note.clone(),
        samples_tested: tested,
        verdict: if refutation.is_some() {
            MultiplierVerdict::Refuted
        } else {
            MultiplierVerdict::Consistent
        },
        refutation,
        test_signs: sign_sequence(&s),
        test_series: s,
        growth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ExactPolynomial {
        ExactPolynomial::new(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    #[test]
    fn apply_examples() {
        let sq = p(&[1, 2, 1]);
        assert_eq!(apply_multiplier(&MultiplierSequence::ones(), &sq).unwrap(), sq);
        let n = MultiplierSequence::parse("n").unwrap();
        let img = apply_multiplier(&n, &sq).unwrap();
        assert_eq!(img, p(&[0, 2, 2]));
        assert!(is_hyperbolic(&img).unwrap().is_hyperbolic());
        let alt = MultiplierSequence::parse("(-1)^n").unwrap();
        assert_eq!(apply_multiplier(&alt, &p(&[1, 1])).unwrap(), p(&[1, -1]));
        let short = MultiplierSequence::parse("1,2").unwrap();
        assert!(matches!(apply_multiplier(&short, &sq), Err(Error::SequenceTooShort { .. })));
        let af = apply_multiplier(&MultiplierSequence::alternating_factorial(), &sq).unwrap();
        assert_eq!(af, p(&[1, -2, 2]));
        assert!(!is_hyperbolic(&af).unwrap().is_hyperbolic());
    }

    #[test]
    fn test_series_of_ones_is_exp() {
        let r = multiplier_sequence_test(&MultiplierSequence::ones(), 20, 6, 30, 1).unwrap();
        assert_eq!(r.verdict, MultiplierVerdict::Consistent);
        assert_eq!(r.test_signs.symbols(), "+".repeat(31));
        let r = multiplier_sequence_test(&MultiplierSequence::alternating_factorial(), 100, 6, 30, 1).unwrap();
        assert_eq!(r.verdict, MultiplierVerdict::Refuted);
    }
}
