//! Hypothesis side of the sign-regularity theorem: eventual alternating pairs
//! and `0 < limsup n |a_n|^(2/n) < inf`, both read at truncation scale.

use crate::error::{Error, Result};
use crate::growth::{log_log_slope, type_statistic, GrowthEstimate, Window};
use crate::scalar::Coefficient;
use crate::series::TruncatedSeries;
use crate::signs::{sign_sequence, tail_check, TailReport};

/// Largest `|d ln S / d ln n|` accepted for the windowed statistic `S_n = n |a_n|^(2/n)`.
pub const SLOPE_TOLERANCE: f64 = 0.2;

#[derive(Clone, Debug, PartialEq)]
pub enum Thm1Verdict {
    Satisfied,
    /// Certified violations inside the window.
    Violated(Vec<usize>),
    GrowthOutside,
}

impl Thm1Verdict {
    pub fn label(&self) -> String {
        match self {
            Thm1Verdict::Satisfied => "hypotheses satisfied within horizon".into(),
            Thm1Verdict::Violated(v) => format!(
                "violated at indices {}",
                v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
            ),
            Thm1Verdict::GrowthOutside => "growth outside (0, inf) window".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Thm1Report {
    pub tail: TailReport,
    pub window: Window,
    pub growth: Option<GrowthEstimate>,
    pub statistic_max: Option<f64>,
    pub statistic_slope: Option<f64>,
    pub tail_ok: bool,
    pub growth_ok: bool,
    pub verdict: Thm1Verdict,
}

/// Tail check on `a_0..=a_horizon` and the `rho = 2` statistic on `window`
/// (default `[horizon/2, horizon]`).
pub fn thm1_hypothesis_check<C: Coefficient>(
    s: &TruncatedSeries<C>,
    horizon: usize,
    window: Option<Window>,
) -> Result<Thm1Report> {
    if horizon > s.order() {
        return Err(Error::InvalidArgument(format!(
            "horizon {horizon} exceeds the truncation order {}",
            s.order()
        )));
    }
    let t = s.truncate(horizon);
    let window = match window {
        Some(w) => Window::new(w.lo, w.hi, horizon)?,
        None => Window::tail(horizon)?,
    };
    let tail = tail_check(&sign_sequence(&t));
    let in_window: Vec<usize> = tail
        .violations
        .iter()
        .copied()
        .filter(|&n| n >= window.lo && n <= window.hi)
        .collect();
    let growth = type_statistic(&t, 2.0, window).ok();
    let statistic_max = growth.as_ref().and_then(GrowthEstimate::question_a_max);
    let statistic_slope = growth.as_ref().and_then(|g| log_log_slope(&g.question_a_samples));
    let growth_ok = matches!(statistic_max, Some(m) if m > 0.0 && m.is_finite())
        && matches!(statistic_slope, Some(k) if k.abs() <= SLOPE_TOLERANCE);
    let tail_ok = tail.analysed && in_window.is_empty();
    let verdict = if !in_window.is_empty() {
        Thm1Verdict::Violated(in_window)
    } else if !growth_ok {
        Thm1Verdict::GrowthOutside
    } else {
        Thm1Verdict::Satisfied
    };
    Ok(Thm1Report {
        tail,
        window,
        growth,
        statistic_max,
        statistic_slope,
        tail_ok,
        growth_ok,
        verdict,
    })
}
