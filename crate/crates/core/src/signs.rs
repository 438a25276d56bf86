//! Certified signs and the alternating-pair condition `a_(n-1) a_(n+1) <= 0`.
//!
//! A violation at `n` needs both neighbours certified nonzero with equal
//! signs. Pairs touching an indeterminate entry are listed separately and
//! never counted. Analysis starts at `n = 1`.

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Sign};
use crate::series::TruncatedSeries;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// How entries were certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SignPolicy {
    /// Exact rationals: the sign is the sign of the value.
    #[serde(rename = "exact")]
    Exact,
    /// Balls: `+`/`-` only when `|mid| > rad`, `0` only for the exact zero.
    #[serde(rename = "ball-radius")]
    BallRadius,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignSequence {
    pub entries: Vec<Sign>,
    pub policy: SignPolicy,
}

impl SignSequence {
    pub fn from_values(v: &[i32]) -> Self {
        SignSequence {
            entries: v.iter().map(|&s| Sign::from_i32(s)).collect(),
            policy: SignPolicy::Exact,
        }
    }

    /// Rendered as `+`, `-`, `0`, `?`.
    pub fn symbols(&self) -> String {
        self.entries.iter().map(|s| s.symbol()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn prefix(&self, n: usize) -> SignSequence {
        SignSequence {
            entries: self.entries[..n.min(self.entries.len())].to_vec(),
            policy: self.policy,
        }
    }

    pub fn indeterminate_count(&self) -> usize {
        self.entries.iter().filter(|s| **s == Sign::Indeterminate).count()
    }
}

pub fn sign_sequence<C: Coefficient>(s: &TruncatedSeries<C>) -> SignSequence {
    let policy = match s.backend() {
        crate::scalar::Backend::Exact => SignPolicy::Exact,
        _ => SignPolicy::BallRadius,
    };
    SignSequence {
        entries: s.coeffs().iter().map(Coefficient::certified_sign).collect(),
        policy,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TailReport {
    /// Last index of the analysed sequence.
    pub horizon: usize,
    /// False when the sequence is too short to analyse.
    pub analysed: bool,
    /// `max(violations)`, or 0 when there are none.
    #[serde(rename = "n0Empirical")]
    pub n0_empirical: usize,
    pub violations: Vec<usize>,
    /// Indices `n` whose pair touches an indeterminate sign.
    #[serde(rename = "indeterminateIndices")]
    pub indeterminate: Vec<usize>,
}

impl TailReport {
    pub fn violations_above(&self, n: usize) -> Vec<usize> {
        self.violations.iter().copied().filter(|&v| v > n).collect()
    }
}

pub fn tail_check(signs: &SignSequence) -> TailReport {
    let e = &signs.entries;
    if e.len() < 3 {
        return TailReport {
            horizon: e.len().saturating_sub(1),
            analysed: false,
            n0_empirical: 0,
            violations: Vec::new(),
            indeterminate: Vec::new(),
        };
    }
    let mut violations = Vec::new();
    let mut indeterminate = Vec::new();
    for n in 1..e.len() - 1 {
        let (l, r) = (e[n - 1], e[n + 1]);
        match (l.value(), r.value()) {
            (Some(a), Some(b)) => {
                if a * b > 0 {
                    violations.push(n);
                }
            }
            _ => indeterminate.push(n),
        }
    }
    TailReport {
        horizon: e.len() - 1,
        analysed: true,
        n0_empirical: violations.last().copied().unwrap_or(0),
        violations,
        indeterminate,
    }
}

/// Start indices where `pattern` (entries `1`/`-1`) matches certified signs exactly.
pub fn pattern_scan(signs: &SignSequence, pattern: &[i32]) -> Result<Vec<usize>> {
    if pattern.is_empty() {
        return Err(Error::InvalidArgument("pattern must be nonempty".into()));
    }
    let e = &signs.entries;
    if pattern.len() > e.len() {
        return Ok(Vec::new());
    }
    Ok((0..=e.len() - pattern.len())
        .filter(|&i| {
            pattern.iter().enumerate().all(|(j, &p)| {
                let s = e[i + j];
                s.is_nonzero() && s.value() == Some(p.signum())
            })
        })
        .collect())
}

/// True when the subsequence is identically zero, or nonzero with strictly alternating signs.
fn strictly_alternating(v: &[&BigRational]) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    if v.iter().any(|x| x.is_zero()) {
        return false;
    }
    v.windows(2).all(|w| w[0].is_positive() != w[1].is_positive())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModulusCheck {
    pub t: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// `|g(it)|^2 = (sum |a_2n| t^2n)^2 + (sum |a_2n+1| t^2n+1)^2` for truncations whose
/// even- and odd-index signs strictly alternate.
pub fn modulus_identity(s: &TruncatedSeries<BigRational>, t: &BigRational) -> Result<ModulusCheck> {
    let c = s.coeffs();
    let even: Vec<&BigRational> = c.iter().step_by(2).collect();
    let odd: Vec<&BigRational> = c.iter().skip(1).step_by(2).collect();
    if !strictly_alternating(&even) || !strictly_alternating(&odd) {
        return Err(Error::Precondition("even/odd signs do not strictly alternate".into()));
    }
    let (re, im) = s.eval_imaginary(t);
    let lhs = &re * &re + &im * &im;
    let abs = TruncatedSeries::from_coeffs(c.iter().map(|x| x.abs()).collect(), s.order());
    let (e, o) = abs.even_odd_split();
    let ev = eval_real(&e, t);
    let ov = eval_real(&o, t);
    let rhs = &ev * &ev + &ov * &ov;
    Ok(ModulusCheck {
        t: t.to_string(),
        holds: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// `|h(it)| = sum |c_2n| t^2n` for even truncations with strictly alternating signs.
pub fn even_modulus_identity(s: &TruncatedSeries<BigRational>, t: &BigRational) -> Result<ModulusCheck> {
    if !s.is_even() {
        return Err(Error::Precondition("series is not even".into()));
    }
    let even: Vec<&BigRational> = s.coeffs().iter().step_by(2).collect();
    if !strictly_alternating(&even) {
        return Err(Error::Precondition("even-index signs do not strictly alternate".into()));
    }
    let (re, im) = s.eval_imaginary(t);
    let lhs = re.abs() + im.abs();
    let abs = TruncatedSeries::from_coeffs(s.coeffs().iter().map(|x| x.abs()).collect(), s.order());
    let rhs = eval_real(&abs, t);
    Ok(ModulusCheck {
        t: t.to_string(),
        holds: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// Horner evaluation at a real point.
pub fn eval_real(s: &TruncatedSeries<BigRational>, t: &BigRational) -> BigRational {
    s.coeffs().iter().rev().fold(BigRational::zero(), |acc, a| acc * t + a)
}
