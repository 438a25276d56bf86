//! Growth diagnostics: order and type from coefficients, exponent of
//! convergence and genus from zero sequences, superior density, Lindelof
//! quantities and category comparison.
//!
//! Limits superior are approximated on index windows. Only certified
//! nonzero coefficients contribute samples, and every sample is reported.

use crate::error::{Error, Result};
use crate::functions::ZeroSequence;
use crate::scalar::Coefficient;
use crate::series::TruncatedSeries;
use num_traits::ToPrimitive;
use std::cmp::Ordering;
use std::f64::consts::E;

/// Inclusive index range `lo..=hi` with `1 <= lo <= hi <= N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: usize,
    pub hi: usize,
}

impl Window {
    pub fn new(lo: usize, hi: usize, order: usize) -> Result<Window> {
        if lo < 1 || lo > hi || hi > order {
            return Err(Error::InvalidWindow { lo, hi, order });
        }
        Ok(Window { lo, hi })
    }

    /// The tail window `[max(1, N/2), N]`.
    pub fn tail(order: usize) -> Result<Window> {
        Window::new((order / 2).max(1), order, order)
    }

    /// Parses `LO..HI`.
    pub fn parse(s: &str) -> Result<(usize, usize)> {
        let bad = || Error::InvalidArgument(format!("window must look like LO..HI, got `{s}`"));
        let (a, b) = s.split_once("..").ok_or_else(bad)?;
        let lo = a.trim().parse().map_err(|_| bad())?;
        let hi = b.trim().parse().map_err(|_| bad())?;
        Ok((lo, hi))
    }

    pub fn render(&self) -> String {
        format!("{}..{}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthEstimate {
    pub window: Window,
    /// Order from the least-squares fit; `f64::INFINITY` when the slope is not positive.
    pub rho_hat: Option<f64>,
    /// Literal windowed maximum of `n log n / (-log |a_n|)`.
    pub rho_windowed_max: Option<f64>,
    pub sigma_hat: Option<f64>,
    pub rho_used: Option<f64>,
    pub order_samples: Vec<(usize, f64)>,
    pub type_samples: Vec<(usize, f64)>,
    /// Raw `n |a_n|^(2/n)` samples, present when `rho = 2`.
    pub question_a_samples: Vec<(usize, f64)>,
}

impl GrowthEstimate {
    fn empty(window: Window) -> Self {
        GrowthEstimate {
            window,
            rho_hat: None,
            rho_windowed_max: None,
            sigma_hat: None,
            rho_used: None,
            order_samples: Vec::new(),
            type_samples: Vec::new(),
            question_a_samples: Vec::new(),
        }
    }

    pub fn question_a_max(&self) -> Option<f64> {
        max_of(&self.question_a_samples)
    }
}

fn max_of(v: &[(usize, f64)]) -> Option<f64> {
    v.iter().map(|p| p.1).fold(None, |m, x| Some(m.map_or(x, |m: f64| m.max(x))))
}

/// `(n, ln |a_n|)` at certified nonzero indices in the window.
fn log_samples<C: Coefficient>(s: &TruncatedSeries<C>, w: Window) -> Vec<(usize, f64)> {
    (w.lo..=w.hi)
        .filter(|&n| s.coeff(n).certified_sign().is_nonzero())
        .filter_map(|n| s.coeff(n).ln_abs().map(|l| (n, l)))
        .collect()
}

fn check_window<C: Coefficient>(s: &TruncatedSeries<C>, w: Window) -> Result<()> {
    Window::new(w.lo, w.hi, s.order()).map(|_| ())
}

/// Solves the normal equations of a small least-squares problem.
fn least_squares(rows: &[Vec<f64>], y: &[f64]) -> Option<Vec<f64>> {
    let k = rows.first()?.len();
    let mut a = vec![vec![0.0; k + 1]; k];
    for (r, &yv) in rows.iter().zip(y) {
        for i in 0..k {
            for j in 0..k {
                a[i][j] += r[i] * r[j];
            }
            a[i][k] += r[i] * yv;
        }
    }
    for c in 0..k {
        let p = (c..k).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        a.swap(c, p);
        let scale = a[c][c];
        if scale.abs() < 1e-12 * (1.0 + a[c].iter().map(|v| v.abs()).fold(0.0, f64::max)) {
            return None;
        }
        for r in 0..k {
            if r != c {
                let f = a[r][c] / scale;
                for j in c..=k {
                    a[r][j] -= f * a[c][j];
                }
            }
        }
    }
    Some((0..k).map(|i| a[i][k] / a[i][i]).collect())
}

/// Order estimate from `-ln|a_n| / n ~ (1/rho) ln n + b + c ln n / n`.
///
/// Samples need `|a_n| < 1`; at least three are required.
pub fn order_estimate<C: Coefficient>(s: &TruncatedSeries<C>, window: Window) -> Result<GrowthEstimate> {
    check_window(s, window)?;
    let logs: Vec<(usize, f64)> = log_samples(s, window).into_iter().filter(|p| p.1 < 0.0).collect();
    if logs.len() < 3 {
        return Err(Error::InsufficientCoefficients {
            lo: window.lo,
            hi: window.hi,
            found: logs.len(),
        });
    }
    let mut est = GrowthEstimate::empty(window);
    est.order_samples = logs
        .iter()
        .map(|&(n, l)| (n, n as f64 * (n as f64).ln() / -l))
        .collect();
    est.rho_windowed_max = max_of(&est.order_samples);
    let rows: Vec<Vec<f64>> = logs
        .iter()
        .map(|&(n, _)| {
            let ln = (n as f64).ln();
            vec![ln, 1.0, ln / n as f64]
        })
        .collect();
    let y: Vec<f64> = logs.iter().map(|&(n, l)| -l / n as f64).collect();
    est.rho_hat = match least_squares(&rows, &y) {
        Some(c) if c[0] > 0.0 => Some(1.0 / c[0]),
        Some(_) => Some(f64::INFINITY),
        None => est.rho_windowed_max,
    };
    Ok(est)
}

/// Type statistic `max n |a_n|^(rho/n) / (e rho)` over the window.
pub fn type_statistic<C: Coefficient>(s: &TruncatedSeries<C>, rho: f64, window: Window) -> Result<GrowthEstimate> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::InvalidArgument(format!("rho must be positive and finite, got {rho}")));
    }
    check_window(s, window)?;
    let logs = log_samples(s, window);
    if logs.len() < 3 {
        return Err(Error::InsufficientCoefficients {
            lo: window.lo,
            hi: window.hi,
            found: logs.len(),
        });
    }
    let mut est = GrowthEstimate::empty(window);
    est.rho_used = Some(rho);
    est.type_samples = logs
        .iter()
        .map(|&(n, l)| (n, n as f64 * (rho * l / n as f64).exp() / (E * rho)))
        .collect();
    est.sigma_hat = max_of(&est.type_samples);
    if rho == 2.0 {
        est.question_a_samples = logs
            .iter()
            .map(|&(n, l)| (n, n as f64 * (2.0 * l / n as f64).exp()))
            .collect();
    }
    Ok(est)
}

/// Slope of `ln v` against `ln n`; `None` for fewer than two positive samples.
pub fn log_log_slope(samples: &[(usize, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .filter(|p| p.1 > 0.0 && p.0 > 0)
        .map(|&(n, v)| ((n as f64).ln(), v.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct DensityReport {
    pub lambda_conv: f64,
    pub genus: u32,
    /// `(t, sum_(n <= count) |x_n|^-t)`.
    pub partial_sums: Vec<(f64, f64)>,
    /// `(r, n(r) / r^lambda)`.
    pub delta_samples: Vec<(f64, f64)>,
    pub delta_hat: Option<f64>,
    /// `(r, delta_f(r))`.
    pub lindelof_samples: Vec<(f64, f64)>,
    pub delta_bar: Option<f64>,
    pub gamma_f: Option<f64>,
}

/// Exponent of convergence and genus from the kind's closed form, with partial sums.
pub fn exponent_and_genus(zeros: &ZeroSequence) -> DensityReport {
    let lambda = ToPrimitive::to_f64(&zeros.declared_exponent()).unwrap_or(f64::NAN);
    let genus = zeros.genus();
    let xs = zeros.materialize_f64();
    let mut ts = vec![0.5, 1.0, 1.5, 2.0, (genus + 1) as f64];
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    let partial_sums = ts
        .into_iter()
        .map(|t| (t, xs.iter().map(|x| x.abs().powf(-t)).sum()))
        .collect();
    DensityReport {
        lambda_conv: lambda,
        genus,
        partial_sums,
        ..Default::default()
    }
}

fn check_radii(radii: &[f64]) -> Result<()> {
    if radii.iter().any(|&r| !(r > 0.0 && r.is_finite())) || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("radii must be positive and increasing".into()));
    }
    Ok(())
}

fn upper_half_max(v: &[(f64, f64)]) -> Option<f64> {
    v[v.len() / 2..].iter().map(|p| p.1).fold(None, |m, x| Some(m.map_or(x, |m: f64| m.max(x))))
}

/// `n(r) / r^lambda` over the radii; `deltaHat` is the maximum over the upper half.
pub fn superior_density_estimate(zeros: &ZeroSequence, lambda: f64, radii: &[f64]) -> Result<DensityReport> {
    check_radii(radii)?;
    let mut mods: Vec<f64> = zeros.materialize_f64().iter().map(|x| x.abs()).collect();
    mods.sort_by(f64::total_cmp);
    let samples: Vec<(f64, f64)> = radii
        .iter()
        .map(|&r| {
            let count = mods.partition_point(|&m| m <= r);
            (r, count as f64 / r.powf(lambda))
        })
        .collect();
    let mut rep = exponent_and_genus(zeros);
    rep.delta_hat = if samples.is_empty() { Some(0.0) } else { upper_half_max(&samples) };
    rep.delta_samples = samples;
    Ok(rep)
}

/// `|alpha + (1/rho) sum_(|x_n| < r) x_n^-rho|`.
pub fn lindelof_delta(zeros: &ZeroSequence, rho: u32, alpha: f64, r: f64) -> Result<f64> {
    if rho == 0 {
        return Err(Error::InvalidArgument("rho must be a positive integer".into()));
    }
    if !(r > 0.0) {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let s: f64 = zeros
        .materialize_f64()
        .iter()
        .filter(|x| x.abs() < r)
        .map(|x| x.powi(-(rho as i32)))
        .sum();
    Ok((alpha + s / rho as f64).abs())
}

/// Density report with Lindelof samples, `delta_bar` and `gamma_f = max(Delta, delta_bar)`.
pub fn lindelof_report(zeros: &ZeroSequence, rho: u32, alpha: f64, radii: &[f64]) -> Result<DensityReport> {
    let mut rep = superior_density_estimate(zeros, rho as f64, radii)?;
    rep.lindelof_samples = radii
        .iter()
        .map(|&r| lindelof_delta(zeros, rho, alpha, r).map(|d| (r, d)))
        .collect::<Result<_>>()?;
    rep.delta_bar = if rep.lindelof_samples.is_empty() {
        Some(alpha.abs())
    } else {
        upper_half_max(&rep.lindelof_samples)
    };
    rep.gamma_f = match (rep.delta_hat, rep.delta_bar) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (a, b) => a.or(b),
    };
    Ok(rep)
}

/// Growth category `(order, type)`, compared lexicographically.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Category {
    pub order: f64,
    pub kind: f64,
}

impl Category {
    pub fn new(order: f64, kind: f64) -> Self {
        Category { order, kind }
    }

    pub fn cmp_lex(&self, other: &Category) -> Ordering {
        self.order
            .total_cmp(&other.order)
            .then(self.kind.total_cmp(&other.kind))
    }
}

pub fn category_max(a: Category, b: Category) -> Category {
    if a.cmp_lex(&b) == Ordering::Less {
        b
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{classical_series, gaussian_series, ClassicalFactor, ZeroKind};
    use crate::series::AnySeries;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn exp_series(n: usize) -> TruncatedSeries<BigRational> {
        match classical_series(&ClassicalFactor::Exp, n, 0).unwrap() {
            AnySeries::Exact(s) => s,
            _ => panic!(),
        }
    }

    #[test]
    fn order_of_exp_and_gaussian() {
        let e = exp_series(200);
        let r = order_estimate(&e, Window::new(50, 200, 200).unwrap()).unwrap();
        assert!((r.rho_hat.unwrap() - 1.0).abs() < 0.02);
        let g = gaussian_series(&q(-1, 1), &q(0, 1), 400);
        let r = order_estimate(&g, Window::new(100, 400, 400).unwrap()).unwrap();
        assert!((r.rho_hat.unwrap() - 2.0).abs() < 0.04);
        assert_eq!(r.order_samples.len(), 151);
        let p = TruncatedSeries::from_rationals(&[q(1, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1)]);
        assert!(matches!(
            order_estimate(&p, Window::new(2, 4, 4).unwrap()),
            Err(Error::InsufficientCoefficients { .. })
        ));
    }

    #[test]
    fn type_of_gaussians() {
        let g = gaussian_series(&q(-1, 1), &q(0, 1), 400);
        let t = type_statistic(&g, 2.0, Window::new(100, 400, 400).unwrap()).unwrap();
        let m = t.question_a_max().unwrap();
        assert!((m - 2.0 * E).abs() / (2.0 * E) < 0.03);
        assert!((t.sigma_hat.unwrap() - 1.0).abs() < 0.03);
        let h = gaussian_series(&q(-1, 1), &q(1, 1), 400);
        let t = type_statistic(&h, 2.0, Window::new(100, 400, 400).unwrap()).unwrap();
        assert!((t.sigma_hat.unwrap() - 1.0).abs() < 0.03);
        let z = TruncatedSeries::<BigRational>::zero(10);
        assert!(type_statistic(&z, 2.0, Window::new(1, 10, 10).unwrap()).is_err());
        assert!(type_statistic(&h, 0.0, Window::new(1, 10, 400).unwrap()).is_err());
    }

    #[test]
    fn windows() {
        assert_eq!(Window::tail(400).unwrap(), Window { lo: 200, hi: 400 });
        assert!(Window::new(0, 3, 5).is_err());
        assert!(Window::new(4, 6, 5).is_err());
        assert_eq!(Window::parse("200..400").unwrap(), (200, 400));
        assert!(Window::parse("200-400").is_err());
    }

    #[test]
    fn genus_and_exponent() {
        let e = ZeroSequence::new(
            ZeroKind::ExpGrowth { scale: q(1, 1), base: crate::functions::ExpBase::E },
            12,
            0,
        )
        .unwrap();
        let r = exponent_and_genus(&e);
        assert_eq!((r.lambda_conv, r.genus), (0.0, 0));
        let p = ZeroSequence::new(ZeroKind::PowerLog { rho: q(3, 2), log_power: 1 }, 20, 1).unwrap();
        let r = exponent_and_genus(&p);
        assert_eq!((r.lambda_conv, r.genus), (1.5, 1));
        let x = ZeroSequence::explicit(vec![q(1, 1), q(2, 1)], 0).unwrap();
        let r = exponent_and_genus(&x);
        assert_eq!((r.lambda_conv, r.genus), (0.0, 0));
        assert!(r.partial_sums.iter().any(|&(t, s)| t == 1.0 && (s - 1.5).abs() < 1e-15));
    }

    #[test]
    fn density_examples() {
        let a = ZeroSequence::new(ZeroKind::Arithmetic { step: q(1, 1) }, 200, 1).unwrap();
        let radii: Vec<f64> = (1..=100).map(|r| r as f64 + 0.5).collect();
        let r = superior_density_estimate(&a, 1.0, &radii).unwrap();
        assert!((r.delta_hat.unwrap() - 1.0).abs() < 0.02);
        let n = r.delta_samples.iter().map(|p| p.1 * p.0).collect::<Vec<_>>();
        assert!(n.windows(2).all(|w| w[0] <= w[1] + 1e-9));
        let p = ZeroSequence::new(ZeroKind::PowerLog { rho: q(2, 1), log_power: 2 }, 4000, 1).unwrap();
        let s1 = superior_density_estimate(&p, 2.0, &[2.0, 3.0, 4.0, 5.0]).unwrap().delta_hat.unwrap();
        let s2 = superior_density_estimate(&p, 2.0, &[10.0, 12.0, 14.0, 16.0]).unwrap().delta_hat.unwrap();
        assert!(s2 < s1);
        let empty = ZeroSequence::explicit(vec![], 0).unwrap();
        let r = superior_density_estimate(&empty, 1.0, &[1.0, 2.0]).unwrap();
        assert_eq!(r.delta_hat, Some(0.0));
        assert!(superior_density_estimate(&empty, 1.0, &[2.0, 1.0]).is_err());
    }

    #[test]
    fn lindelof_examples() {
        let z = ZeroSequence::explicit(vec![q(1, 1), q(-1, 1), q(2, 1), q(-2, 1)], 0).unwrap();
        assert!((lindelof_delta(&z, 2, 0.0, 3.0).unwrap() - 1.25).abs() < 1e-15);
        assert_eq!(lindelof_delta(&z, 2, 0.5, 0.5).unwrap(), 0.5);
        let s = ZeroSequence::explicit(vec![q(1, 1), q(-1, 1)], 0).unwrap();
        assert_eq!(lindelof_delta(&s, 1, 0.0, 2.0).unwrap(), 0.0);
        assert!(lindelof_delta(&s, 0, 0.0, 2.0).is_err());
        let rep = lindelof_report(&z, 2, 0.0, &[0.5, 1.5, 3.0]).unwrap();
        assert_eq!(rep.delta_bar, Some(1.25));
    }

    #[test]
    fn categories() {
        let a = Category::new(2.0, 1.0);
        assert_eq!(category_max(a, Category::new(1.0, 5.0)), a);
        assert_eq!(category_max(a, Category::new(2.0, 3.0)), Category::new(2.0, 3.0));
        assert_eq!(category_max(a, a), a);
        let inf = Category::new(f64::INFINITY, 0.0);
        assert_eq!(category_max(a, inf), inf);
    }
}
