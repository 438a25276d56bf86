use super::report::{coeff_rows, float, opt_float, samples, Report};
use super::spec_doc::parse_spec;
use super::{Command, Common};
use crate::error::{Error, Result};
use crate::functions::{build_function, classify_subclass, FunctionSpec, ZeroSequence};
use crate::growth::{exponent_and_genus, order_estimate, type_statistic, Window};
use crate::hyperbolicity::random::{integer_roots, rng, same_sign_roots, upper_half_plane_zeros};
use crate::hyperbolicity::{
    even_odd_imaginary_check, from_complex_roots, hermite_biehler_check, multiplier_sequence_test, ExactPolynomial,
    Lemma2Report, MultiplierSequence, MultiplierVerdict,
};
use crate::scalar::rational::{parse_rational, render_rational};
use crate::series::AnySeries;
use crate::signs::{sign_sequence, tail_check, SignSequence, TailReport};
use crate::theorems::{
    corollary1_verify, thm1_hypothesis_check, thm2_n0_bound, thm3_construct, thm3_violations, Thm1Verdict, Thm2Report,
    Thm3Base,
};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

macro_rules! on_series {
    ($s:expr, |$t:ident| $body:expr) => {
        match $s {
            AnySeries::Exact($t) => $body,
            AnySeries::Approx($t) => $body,
        }
    };
}

fn need_spec(text: Option<&str>) -> Result<FunctionSpec> {
    parse_spec(text.ok_or_else(|| Error::InvalidArgument("--spec is required".into()))?)
}

fn leading(c: &Common, default: usize) -> Result<usize> {
    let n = c.order.unwrap_or(default);
    if n == 0 {
        return Err(Error::InvalidArgument("--order must be at least 1".into()));
    }
    Ok(n - 1)
}

fn window(c: &Common, order: usize) -> Result<Window> {
    match &c.window {
        Some(w) => {
            let (lo, hi) = Window::parse(w)?;
            Window::new(lo, hi, order)
        }
        None => Window::tail(order),
    }
}

fn rat_list(s: &str) -> Result<Vec<BigRational>> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

fn poly_arg(poly: &Option<String>, roots: &Option<String>) -> Result<Option<ExactPolynomial>> {
    match (poly, roots) {
        (Some(_), Some(_)) => Err(Error::InvalidArgument("give --poly or --roots, not both".into())),
        (Some(p), None) => Ok(Some(ExactPolynomial::new(rat_list(p)?))),
        (None, Some(r)) => Ok(Some(ExactPolynomial::from_roots(&rat_list(r)?))),
        (None, None) => Ok(None),
    }
}

fn rat(q: &BigRational) -> Value {
    Value::from(render_rational(q))
}

fn poly_json(p: &ExactPolynomial) -> Value {
    Value::from(p.render())
}

fn tail_json(t: &TailReport) -> Value {
    let mut v = serde_json::to_value(t).expect("serializable");
    v["unresolved"] = Value::from(t.indeterminate.clone());
    v
}

fn signs_json(s: &SignSequence) -> Value {
    json!({
        "symbols": s.symbols(),
        "policy": s.policy,
        "count": s.len(),
        "indeterminate": s.indeterminate_count(),
    })
}

fn tail_text(t: &TailReport) -> String {
    let list = |v: &[usize]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
        }
    };
    format!(
        "horizon: {}\nviolations: {}\nn0Empirical: {}\nunresolved: {}",
        t.horizon,
        list(&t.violations),
        t.n0_empirical,
        list(&t.indeterminate)
    )
}

pub(super) fn dispatch(cmd: &Command, spec_text: Option<&str>, r: &mut Report) -> Result<()> {
    match cmd {
        Command::Coeffs(c) => coeffs(c, spec_text, r),
        Command::Signs(c) => signs(c, spec_text, r),
        Command::Tail(c) => tail(c, spec_text, r),
        Command::Growth { common, rho } => growth(common, rho, spec_text, r),
        Command::Classify(_) => classify(spec_text, r),
        Command::VerifyThm1(c) => verify_thm1(c, spec_text, r),
        Command::VerifyThm2 {
            common,
            poly,
            roots,
            a,
            count,
            max_degree,
        } => verify_thm2(common, poly, roots, a, *count, *max_degree, r),
        Command::VerifyThm3 {
            common,
            rho,
            count1,
            count2,
            base,
            a,
        } => verify_thm3(common, rho, *count1, *count2, base, a, r),
        Command::VerifyCor1(c) => verify_cor1(c, spec_text, r),
        Command::Lemma2 {
            common,
            poly,
            roots,
            count,
            max_degree,
        } => lemma2(common, poly, roots, *count, *max_degree, r),
        Command::MultiplierTest {
            common,
            gamma,
            samples,
            max_degree,
        } => multiplier(common, gamma, *samples, *max_degree, r),
        Command::HbCheck { common, u, v, count } => hb_check(common, u, v, *count, r),
    }
}

fn coeffs(c: &Common, spec_text: Option<&str>, r: &mut Report) -> Result<()> {
    let spec = need_spec(spec_text)?;
    let s = build_function(&spec, leading(c, 25)?, c.precision)?;
    r.backend = Some(s.backend());
    let rows = on_series!(&s, |t| coeff_rows(t));
    r.text = Some(
        rows.iter()
            .map(|x| format!("{} {} {} {}", x.n, x.value, x.error, x.sign))
            .collect::<Vec<_>>()
            .join("\n"),
    );
    r.rows = Some(rows);
    Ok(())
}

fn signs(c: &Common, spec_text: Option<&str>, r: &mut Report) -> Result<()> {
    let spec = need_spec(spec_text)?;
    let s = build_function(&spec, leading(c, 25)?, c.precision)?;
    r.backend = Some(s.backend());
    let seq = on_series!(&s, |t| sign_sequence(t));
    r.rows = Some(on_series!(&s, |t| coeff_rows(t)));
    r.text = Some(seq.symbols());
    r.section("signs", signs_json(&seq));
    Ok(())
}

fn tail(c: &Common, spec_text: Option<&str>, r: &mut Report) -> Result<()> {
    let spec = need_spec(spec_text)?;
    let h = c.horizon.unwrap_or(200);
    let s = build_function(&spec, h, c.precision)?;
    r.backend = Some(s.backend());
    let seq = on_series!(&s, |t| sign_sequence(t));
    let t = tail_check(&seq);
    r.rows = Some(on_series!(&s, |t| coeff_rows(t)));
    r.text = Some(tail_text(&t));
    r.section("signs", signs_json(&seq));
    r.section("tail", tail_json(&t));
    Ok(())
}

fn growth(c: &Common, rho: &str, spec_text: Option<&str>, r: &mut Report) -> Result<()> {
    let spec = need_spec(spec_text)?;
    let order = leading(c, 401)?;
    let rho = parse_rational(rho)?
        .to_f64()
        .ok_or_else(|| Error::InvalidArgument("rho out of range".into()))?;
    let s = build_function(&spec, order, c.precision)?;
    r.backend = Some(s.backend());
    let w = window(c, order)?;
    let o = on_series!(&s, |t| order_estimate(t, w))?;
    let ty = on_series!(&s, |t| type_statistic(t, rho, w))?;
    let show = |x: Option<f64>| x.map_or("n/a".to_string(), |v| format!("{v:.6}"));
    r.text = Some(format!(
        "window: {}\nrhoHat: {}\nrhoWindowedMax: {}\nsigmaHat: {}\nquestionAMax: {}",
        w.render(),
        show(o.rho_hat),
        show(o.rho_windowed_max),
        show(ty.sigma_hat),
        show(ty.question_a_max())
    ));
    r.section(
        "growth",
        json!({
            "window": w.render(),
            "rhoHat": opt_float(o.rho_hat),
            "rhoWindowedMax": opt_float(o.rho_windowed_max),
            "orderSamples": samples(&o.order_samples),
            "type": {
                "rho": float(rho),
                "sigmaHat": opt_float(ty.sigma_hat),
                "typeSamples": samples(&ty.type_samples),
                "questionAMax": opt_float(ty.question_a_max()),
                "questionASamples": samples(&ty.question_a_samples),
            },
        }),
    );
    Ok(())
}

fn factor_json(z: &ZeroSequence) -> Value {
    let d = exponent_and_genus(z);
    json!({
        "count": z.count,
        "lambda": z.lambda,
        "lambdaConv": rat(&z.declared_exponent()),
        "genus": d.genus,
        "partialSums": d.partial_sums.iter().map(|&(t, s)| json!([float(t), float(s)])).collect::<Vec<_>>(),
    })
}

fn classify(spec_text: Option<&str>, r: &mut Report) -> Result<()> {
    let spec = need_spec(spec_text)?;
    let c = classify_subclass(&spec);
    let exponent = spec
        .product_factors
        .iter()
        .map(ZeroSequence::declared_exponent)
        .max()
        .unwrap_or_default();
    r.text = Some(format!("{} ({})", c.subclass.label(), c.reason));
    r.section(
        "classification",
        json!({
            "subclass": c.subclass.label(),
            "reason": c.reason,
            "parity": spec.parity(),
            "exact": spec.is_exact(),
            "declaredExponent": rat(&exponent),
            "productFactors": spec.product_factors.iter().map(factor_json).collect::<Vec<_>>(),
        }),
    );
    Ok(())
}

fn verify_thm1(c: &Common, spec_text: Option<&str>, r: &mut Report) -> Result<()> {
    let spec = need_spec(spec_text)?;
    let h = c.horizon.unwrap_or(200);
    let s = build_function(&spec, h, c.precision)?;
    r.backend = Some(s.backend());
    let w = match &c.window {
        Some(_) => Some(window(c, h)?),
        None => None,
    };
    let t = on_series!(&s, |x| thm1_hypothesis_check(x, h, w))?;
    r.counter_finding = matches!(t.verdict, Thm1Verdict::Violated(_));
    r.text = Some(t.verdict.label());
    r.section(
        "thm1",
        json!({
            "verdict": t.verdict.label(),
            "tailOk": t.tail_ok,
            "growthOk": t.growth_ok,
            "window": t.window.render(),
            "statisticMax": opt_float(t.statistic_max),
            "statisticSlope": opt_float(t.statistic_slope),
            "tail": tail_json(&t.tail),
        }),
    );
    Ok(())
}

fn thm2_json(p: &ExactPolynomial, t: &Thm2Report) -> Value {
    json!({
        "P": poly_json(p),
        "a": rat(&t.a),
        "m": t.m,
        "P1": poly_json(&t.p1),
        "P2": poly_json(&t.p2),
        "k1": t.k1,
        "k2": t.k2,
        "k0": t.k0,
        "n0Bound": t.n0_bound,
        "horizon": t.horizon,
        "empiricalFirstClean": t.empirical_first_clean,
        "violations": t.tail.violations,
        "violationsAboveBound": t.violations_above_bound,
        "oddIdentityChecked": t.odd_identity_checked,
        "evenIdentityChecked": t.even_identity_checked,
        "identityFailures": t.identity_failures,
        "boundValid": t.bound_valid(),
        "identitiesHold": t.identities_hold(),
    })
}

fn verify_thm2(
    c: &Common,
    poly: &Option<String>,
    roots: &Option<String>,
    a: &Option<String>,
    count: usize,
    max_degree: usize,
    r: &mut Report,
) -> Result<()> {
    let h = c.horizon.unwrap_or(400);
    let a_values = match a {
        Some(a) => vec![parse_rational(a)?],
        None => vec![parse_rational("-1")?, parse_rational("-1/3")?],
    };
    let polys = match poly_arg(poly, roots)? {
        Some(p) => vec![p],
        None => {
            let mut g = rng(c.seed);
            (0..count).map(|_| integer_roots(&mut g, max_degree).0).collect()
        }
    };
    let jobs: Vec<(&ExactPolynomial, &BigRational)> =
        polys.iter().flat_map(|p| a_values.iter().map(move |a| (p, a))).collect();
    let results: Vec<Result<(Value, bool)>> = jobs
        .par_iter()
        .map(|(p, a)| {
            let t = thm2_n0_bound(p, a, h)?;
            Ok((thm2_json(p, &t), t.bound_valid() && t.identities_hold()))
        })
        .collect();
    let mut instances = Vec::new();
    let mut failures = 0;
    for x in results {
        let (v, ok) = x?;
        failures += usize::from(!ok);
        instances.push(v);
    }
    r.counter_finding = failures > 0;
    r.text = Some(format!("instances: {}\nfailures: {failures}", instances.len()));
    r.section("thm2", json!({ "instances": instances, "failures": failures, "horizon": h }));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify_thm3(c: &Common, rho: &str, count1: usize, count2: usize, base: &str, a: &str, r: &mut Report) -> Result<()> {
    let rho = parse_rational(rho)?;
    let a = parse_rational(a)?;
    let base = Thm3Base::parse(base)?;
    let h = c.horizon.unwrap_or(300);
    let con = thm3_construct(&rho, count1, count2, base)?;
    let out = thm3_violations(&con, &a, h, c.precision)?;
    r.backend = Some(out.backend);
    let verdict = if out.tail.violations.is_empty() {
        "no violation within horizon"
    } else {
        "as expected"
    };
    r.text = Some(format!("{verdict}\n{}", tail_text(&out.tail)));
    r.section(
        "thm3",
        json!({
            "rho": rat(&rho),
            "base": base.label(),
            "count1": con.count1,
            "count2": con.count2,
            "a": rat(&a),
            "horizon": h,
            "declaredExponent": rat(&con.declared_exponent()),
            "precisionUsed": out.precision,
            "verdict": verdict,
            "tail": tail_json(&out.tail),
            "note": "conclusions concern the truncated products",
        }),
    );
    Ok(())
}

fn verify_cor1(c: &Common, spec_text: Option<&str>, r: &mut Report) -> Result<()> {
    let spec = need_spec(spec_text)?;
    let h = c.horizon.unwrap_or(500);
    let rep = corollary1_verify(&spec, h, c.precision)?;
    r.backend = Some(rep.backend);
    r.counter_finding = !rep.tail.violations.is_empty();
    r.text = Some(format!(
        "{}\n{}",
        if rep.holds() { "holds within horizon" } else { "does not hold" },
        tail_text(&rep.tail)
    ));
    r.section(
        "cor1",
        json!({
            "parity": rep.parity,
            "horizon": h,
            "window": rep.window.render(),
            "statisticMax": opt_float(rep.statistic_max),
            "statisticOk": rep.statistic_ok,
            "holds": rep.holds(),
            "tail": tail_json(&rep.tail),
        }),
    );
    Ok(())
}

fn lemma2_json(l: &Lemma2Report) -> Value {
    json!({
        "P": poly_json(&l.base),
        "zeroSign": l.zero_sign,
        "evenU": poly_json(&l.even.u_poly),
        "oddU": poly_json(&l.odd.u_poly),
        "evenPass": l.even.pass,
        "oddPass": l.odd.pass,
        "pass": l.pass(),
    })
}

fn lemma2(
    c: &Common,
    poly: &Option<String>,
    roots: &Option<String>,
    count: usize,
    max_degree: usize,
    r: &mut Report,
) -> Result<()> {
    let polys = match poly_arg(poly, roots)? {
        Some(p) => vec![p],
        None => {
            let mut g = rng(c.seed);
            (0..count).map(|_| same_sign_roots(&mut g, max_degree, true).0).collect()
        }
    };
    let reports = polys
        .par_iter()
        .map(even_odd_imaginary_check)
        .collect::<Result<Vec<_>>>()?;
    let failures = reports.iter().filter(|l| !l.pass()).count();
    r.counter_finding = failures > 0;
    r.text = Some(format!("instances: {}\nfailures: {failures}", reports.len()));
    r.section(
        "lemma2",
        json!({
            "instances": reports.iter().map(lemma2_json).collect::<Vec<_>>(),
            "failures": failures,
        }),
    );
    Ok(())
}

fn multiplier(c: &Common, gamma: &str, samples_n: usize, max_degree: usize, r: &mut Report) -> Result<()> {
    let seq = MultiplierSequence::parse(gamma)?;
    let order = leading(c, 31)?;
    let m = multiplier_sequence_test(&seq, samples_n, max_degree, order, c.seed)?;
    r.counter_finding = m.verdict == MultiplierVerdict::Refuted;
    let refutation = m.refutation.as_ref().map_or(Value::Null, |f| {
        json!({
            "sample": f.sample,
            "input": poly_json(&f.input),
            "image": poly_json(&f.image),
            "deficit": f.deficit,
        })
    });
    r.text = Some(m.verdict.label().to_string());
    r.section(
        "multiplier",
        json!({
            "gamma": m.note,
            "samplesTested": m.samples_tested,
            "verdict": m.verdict.label(),
            "refutation": refutation,
            "testSeriesSigns": m.test_signs.symbols(),
            "testSeriesRhoHat": opt_float(m.growth.as_ref().and_then(|g| g.rho_hat)),
        }),
    );
    Ok(())
}

fn hb_check(c: &Common, u: &Option<String>, v: &Option<String>, count: usize, r: &mut Report) -> Result<()> {
    match (u, v) {
        (Some(u), Some(v)) => {
            let u = ExactPolynomial::new(rat_list(u)?);
            let v = ExactPolynomial::new(rat_list(v)?);
            let h = hermite_biehler_check(&u, &v)?;
            r.text = Some(format!("{} ({})", h.interlace, h.reason));
            r.section("hbCheck", json!({ "interlace": h.interlace, "reason": h.reason }));
            Ok(())
        }
        (None, None) => {
            let mut g = rng(c.seed);
            let planted: Vec<_> = (0..count).map(|_| upper_half_plane_zeros(&mut g, 2, 6)).collect();
            let results = planted
                .par_iter()
                .enumerate()
                .map(|(i, zs)| {
                    let mut bad = Vec::new();
                    let (pu, pv) = from_complex_roots(zs);
                    if !hermite_biehler_check(&pu, &pv)?.interlace {
                        bad.push(json!({ "instance": i, "reflected": Value::Null }));
                    }
                    for j in 0..zs.len() {
                        let mut w = zs.clone();
                        w[j].im = -w[j].im.clone();
                        let (ru, rv) = from_complex_roots(&w);
                        if hermite_biehler_check(&ru, &rv)?.interlace {
                            bad.push(json!({ "instance": i, "reflected": j }));
                        }
                    }
                    Ok((bad, zs.len()))
                })
                .collect::<Result<Vec<_>>>()?;
            let reflections: usize = results.iter().map(|x| x.1).sum();
            let bad: Vec<Value> = results.into_iter().flat_map(|x| x.0).collect();
            r.counter_finding = !bad.is_empty();
            r.text = Some(format!(
                "planted: {count}\nreflections: {reflections}\nmisclassifications: {}",
                bad.len()
            ));
            r.section(
                "hbCheck",
                json!({ "planted": count, "reflections": reflections, "misclassifications": bad }),
            );
            Ok(())
        }
        _ => Err(Error::InvalidArgument("give both --u and --v, or neither for the battery".into())),
    }
}
