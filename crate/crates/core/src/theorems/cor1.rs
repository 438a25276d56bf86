//! Even and odd members of `LP^a`: alternating pairs at every index, no exceptional `n0`.

use crate::error::{Error, Result};
use crate::functions::{build_function, FunctionSpec, Parity};
use crate::growth::{type_statistic, Window};
use crate::scalar::Backend;
use crate::series::AnySeries;
use crate::signs::{sign_sequence, tail_check, TailReport};
use num_traits::Signed;

#[derive(Clone, Debug, PartialEq)]
pub struct Cor1Report {
    pub parity: Parity,
    pub horizon: usize,
    pub backend: Backend,
    pub tail: TailReport,
    pub window: Window,
    pub statistic_max: Option<f64>,
    pub statistic_ok: bool,
}

impl Cor1Report {
    /// No violation at any `n` in `[1, horizon)` and a positive finite statistic.
    pub fn holds(&self) -> bool {
        self.tail.analysed && self.tail.violations.is_empty() && self.statistic_ok
    }
}

pub fn corollary1_verify(spec: &FunctionSpec, horizon: usize, precision: u32) -> Result<Cor1Report> {
    let parity = spec.parity();
    if parity == Parity::Neither {
        return Err(Error::Precondition("function is neither even nor odd".into()));
    }
    if !spec.gauss_a.is_negative() {
        return Err(Error::Precondition("gaussian factor a < 0 required".into()));
    }
    let s = build_function(spec, horizon, precision)?;
    let window = Window::tail(horizon)?;
    let (signs, stat) = match &s {
        AnySeries::Exact(e) => (sign_sequence(e), type_statistic(e, 2.0, window)),
        AnySeries::Approx(b) => (sign_sequence(b), type_statistic(b, 2.0, window)),
    };
    let statistic_max = stat.ok().and_then(|g| g.question_a_max());
    Ok(Cor1Report {
        parity,
        horizon,
        backend: s.backend(),
        tail: tail_check(&signs),
        window,
        statistic_ok: matches!(statistic_max, Some(m) if m > 0.0 && m.is_finite()),
        statistic_max,
    })
}
