//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each. Tolerances are pinned here.

use lpsign::functions::{build_function, laguerre_product_form, ClassicalFactor, FunctionSpec, RealParam, ZeroKind, ZeroSequence};
use lpsign::growth::{type_statistic, Window};
use lpsign::hyperbolicity::random::{integer_roots, rng, same_sign_roots, upper_half_plane_zeros, DEFAULT_SEED};
use lpsign::hyperbolicity::{
    even_odd_imaginary_check, from_complex_roots, hermite_biehler_check, multiplier_sequence_test, MultiplierSequence,
    MultiplierVerdict,
};
use lpsign::signs::{modulus_identity, sign_sequence};
use lpsign::theorems::{corollary1_verify, thm2_n0_bound, thm3_construct, thm3_violations, Thm3Base};
use lpsign::{AnySeries, Coefficient, TruncatedSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use std::time::{Duration, Instant};

const PRECISION: u32 = 256;
/// Combined error allowed in the Laguerre family comparison.
const LAGUERRE_TOL: f64 = 1e-12;
/// Relative distance of the windowed statistic from `2e|a|`.
const STATISTIC_REL_TOL: f64 = 0.03;
const TABLES_BUDGET: Duration = Duration::from_secs(10);
const THM2_BUDGET: Duration = Duration::from_secs(120);

/// Printed sign tables of exp(-z^2)e^z, exp(-z^2)/Gamma(z) and exp(-z^2)cos(sqrt z).
const TABLE_EXP: [i32; 27] = [
    1, 1, -1, -1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1,
];
const TABLE_GAMMA: [i32; 25] = [
    0, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1,
];
const TABLE_COS_SQRT: [i32; 23] = [1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1];

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn z(n: i64) -> BigRational {
    q(n, 1)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(name: &str, f: impl FnOnce() -> Outcome, failures: &mut usize) {
    let t = Instant::now();
    let o = f();
    let tag = if o.pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {name}: {} ({:.2}s)", o.detail, t.elapsed().as_secs_f64());
    if !o.pass {
        *failures += 1;
    }
}

fn signs_of(spec: &FunctionSpec, len: usize) -> String {
    let s = build_function(spec, len - 1, PRECISION).expect("build");
    match &s {
        AnySeries::Exact(e) => sign_sequence(e).symbols(),
        AnySeries::Approx(b) => sign_sequence(b).symbols(),
    }
}

fn table_symbols(t: &[i32]) -> String {
    t.iter()
        .map(|&v| match v {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

fn gauss_with(c: ClassicalFactor) -> FunctionSpec {
    FunctionSpec {
        gauss_a: z(-1),
        classical_factors: vec![c],
        ..Default::default()
    }
}

fn c1_tables() -> Outcome {
    let t = Instant::now();
    let cases = [
        ("exp", gauss_with(ClassicalFactor::Exp), &TABLE_EXP[..]),
        ("recip_gamma", gauss_with(ClassicalFactor::RecipGamma), &TABLE_GAMMA[..]),
        ("cos_sqrt", gauss_with(ClassicalFactor::CosSqrt), &TABLE_COS_SQRT[..]),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, spec, table) in cases {
        let got = signs_of(&spec, table.len());
        let want = table_symbols(table);
        let mismatches: Vec<usize> = got
            .chars()
            .zip(want.chars())
            .enumerate()
            .filter(|(_, (g, w))| g != w)
            .map(|(i, _)| i)
            .collect();
        if !mismatches.is_empty() || got.contains('?') {
            pass = false;
        }
        parts.push(format!("{name} got {got} mismatches {mismatches:?}"));
    }
    let elapsed = t.elapsed();
    if elapsed > TABLES_BUDGET {
        pass = false;
    }
    Outcome {
        pass,
        detail: format!("{}; runtime {:.2}s", parts.join("; "), elapsed.as_secs_f64()),
    }
}

fn c2_laguerre() -> Outcome {
    let params = [
        (RealParam::Rational(z(0)), RealParam::Rational(z(1)), 0.0, 1.0),
        (RealParam::Rational(q(1, 2)), RealParam::Rational(z(2)), 0.5, 2.0),
        (RealParam::Rational(z(1)), RealParam::PiMultiple(q(1, 3)), 1.0, std::f64::consts::PI / 3.0),
    ];
    let mut worst = 0.0f64;
    for (phase, angle, ph, an) in params {
        let s = laguerre_product_form(&phase, &angle, 40, PRECISION);
        let mut fact = 1.0f64;
        for n in 0..=40usize {
            if n > 0 {
                fact *= n as f64;
            }
            let want = (ph + n as f64 * an).cos() / fact;
            let c = s.coeff(n);
            let err = (Coefficient::to_f64(c) - want).abs() + c.rad_f64();
            worst = worst.max(err);
        }
    }
    Outcome {
        pass: worst <= LAGUERRE_TOL,
        detail: format!("max combined error {worst:.3e} (tolerance {LAGUERRE_TOL:e})"),
    }
}

fn explicit(zeros: Vec<BigRational>) -> ZeroSequence {
    ZeroSequence::explicit(zeros, 0).expect("zeros")
}

fn c3_statistic() -> Outcome {
    let polys: [(u32, Vec<BigRational>); 3] = [(0, vec![z(1), z(-1)]), (0, vec![z(1), z(2)]), (1, vec![z(3)])];
    let mut pass = true;
    let mut parts = Vec::new();
    for a in [z(-1), q(-1, 2)] {
        for (k, zeros) in &polys {
            let spec = FunctionSpec {
                gauss_a: a.clone(),
                monomial_power: *k,
                product_factors: vec![explicit(zeros.clone())],
                ..Default::default()
            };
            let s = build_function(&spec, 400, PRECISION).expect("build");
            let w = Window::new(200, 400, 400).expect("window");
            let g = match &s {
                AnySeries::Exact(e) => type_statistic(e, 2.0, w),
                AnySeries::Approx(b) => type_statistic(b, 2.0, w),
            }
            .expect("statistic");
            let target = 2.0 * std::f64::consts::E * num_traits::ToPrimitive::to_f64(&a).unwrap().abs();
            let got = g.question_a_max().unwrap_or(f64::NAN);
            let rel = (got - target).abs() / target;
            if !(rel <= STATISTIC_REL_TOL) {
                pass = false;
            }
            parts.push(format!("a={a} {got:.4}/{target:.4}"));
        }
    }
    Outcome {
        pass,
        detail: parts.join(", "),
    }
}

fn c4_thm2() -> Outcome {
    let t = Instant::now();
    let mut g = rng(DEFAULT_SEED);
    let polys: Vec<_> = (0..50).map(|_| integer_roots(&mut g, 6).0).collect();
    let mut failures = 0;
    let mut runs = 0;
    for p in &polys {
        for a in [z(-1), q(-1, 3)] {
            let r = thm2_n0_bound(p, &a, 400).expect("thm2");
            runs += 1;
            if !(r.bound_valid() && r.identities_hold()) {
                failures += 1;
            }
        }
    }
    let elapsed = t.elapsed();
    Outcome {
        pass: failures == 0 && elapsed <= THM2_BUDGET,
        detail: format!("{runs} runs, {failures} failures, runtime {:.2}s", elapsed.as_secs_f64()),
    }
}

fn thm3_run(rho: BigRational, count1: usize, count2: usize, base: Thm3Base) -> Vec<usize> {
    let c = thm3_construct(&rho, count1, count2, base).expect("construct");
    let out = thm3_violations(&c, &z(-1), 300, PRECISION).expect("violations");
    assert!(out.tail.indeterminate.is_empty(), "unresolved signs remain");
    out.tail.violations
}

fn c5_thm3() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for base in [Thm3Base::Three, Thm3Base::E] {
        let v = thm3_run(z(0), 12, 10, base);
        let late = v.iter().filter(|&&n| n > 50).count();
        if late < 3 {
            pass = false;
        }
        parts.push(format!("rho=0 base {} violations {v:?} ({late} beyond 50, need 3)", base.label()));
    }
    for rho in [z(1), z(2)] {
        let v = thm3_run(rho.clone(), 12, 10, Thm3Base::E);
        if v.is_empty() {
            pass = false;
        }
        parts.push(format!("rho={rho} violations {v:?}"));
    }
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn c5_goldens() -> Outcome {
    let got = [
        thm3_run(z(0), 12, 10, Thm3Base::Three),
        thm3_run(z(0), 12, 10, Thm3Base::E),
        thm3_run(z(1), 12, 10, Thm3Base::E),
        thm3_run(z(2), 12, 10, Thm3Base::E),
    ];
    let want: [&[usize]; 4] = [&[33], &[23, 248], &[27, 260], &[31, 266]];
    Outcome {
        pass: got.iter().zip(want).all(|(g, w)| g == w),
        detail: format!("{got:?}"),
    }
}

fn c6_lemma2() -> Outcome {
    let mut g = rng(DEFAULT_SEED);
    let mut failures = 0;
    for _ in 0..100 {
        let (p, _) = same_sign_roots(&mut g, 10, true);
        match even_odd_imaginary_check(&p) {
            Ok(r) if r.pass() => {}
            _ => failures += 1,
        }
    }
    Outcome {
        pass: failures == 0,
        detail: format!("100 polynomials, {failures} failures"),
    }
}

fn c7_hermite_biehler() -> Outcome {
    let mut g = rng(DEFAULT_SEED);
    let mut wrong = 0;
    let mut reflections = 0;
    for _ in 0..100 {
        let zs = upper_half_plane_zeros(&mut g, 2, 6);
        let (u, v) = from_complex_roots(&zs);
        if !hermite_biehler_check(&u, &v).map(|h| h.interlace).unwrap_or(false) {
            wrong += 1;
        }
        for j in 0..zs.len() {
            let mut w = zs.clone();
            w[j].im = -w[j].im.clone();
            let (u, v) = from_complex_roots(&w);
            reflections += 1;
            if hermite_biehler_check(&u, &v).map(|h| h.interlace).unwrap_or(true) {
                wrong += 1;
            }
        }
    }
    Outcome {
        pass: wrong == 0,
        detail: format!("100 planted, {reflections} reflections, {wrong} misclassifications"),
    }
}

fn c8_cor1() -> Outcome {
    let pair = |y: i64| vec![z(y), z(-y)];
    let specs = [
        ("even exp(-z^2)", 0, z(-1), vec![]),
        ("even exp(-z^2)(1-z^2)", 0, z(-1), vec![explicit(pair(1))]),
        (
            "even exp(-z^2/2) power-log pairs",
            0,
            q(-1, 2),
            vec![ZeroSequence::new(ZeroKind::PowerLog { rho: z(1), log_power: 1 }, 6, 1).expect("zeros")],
        ),
        ("odd z exp(-z^2)", 1, z(-1), vec![]),
        ("odd z exp(-z^2/2)(1-z^2/4)", 1, q(-1, 2), vec![explicit(pair(2))]),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, k, a, factors) in specs {
        let spec = FunctionSpec {
            gauss_a: a,
            monomial_power: k,
            product_factors: factors,
            ..Default::default()
        };
        let r = corollary1_verify(&spec, 500, PRECISION).expect("cor1");
        if !(r.tail.violations.is_empty() && r.tail.indeterminate.is_empty() && r.statistic_ok) {
            pass = false;
        }
        parts.push(format!(
            "{name}: {} violations, statistic {:.4}",
            r.tail.violations.len(),
            r.statistic_max.unwrap_or(f64::NAN)
        ));
    }
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn c9_modulus() -> Outcome {
    let mut g = rng(DEFAULT_SEED);
    let mut failures = 0;
    for _ in 0..50 {
        let len = g.random_range(4..=16usize);
        let c: Vec<BigRational> = (0..len)
            .map(|n| {
                let v = q(g.random_range(1..=20i64), g.random_range(1..=9i64));
                if (n / 2) % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect();
        let s = TruncatedSeries::from_rationals(&c);
        for t in [q(1, 2), z(1), z(2)] {
            if !modulus_identity(&s, &t).map(|m| m.holds).unwrap_or(false) {
                failures += 1;
            }
        }
    }
    Outcome {
        pass: failures == 0,
        detail: format!("50 truncations at t in {{1/2, 1, 2}}, {failures} failures"),
    }
}

fn c10_multiplier() -> Outcome {
    let refuted = multiplier_sequence_test(&MultiplierSequence::alternating_factorial(), 100, 6, 30, DEFAULT_SEED)
        .expect("multiplier");
    let ones = multiplier_sequence_test(&MultiplierSequence::ones(), 100, 6, 30, DEFAULT_SEED).expect("multiplier");
    let linear = multiplier_sequence_test(&MultiplierSequence::n_plus_one(), 100, 6, 30, DEFAULT_SEED).expect("multiplier");
    let pass = refuted.verdict == MultiplierVerdict::Refuted
        && refuted.refutation.is_some()
        && ones.verdict == MultiplierVerdict::Consistent
        && ones.samples_tested == 100
        && linear.verdict == MultiplierVerdict::Consistent
        && linear.samples_tested == 100;
    let instance = refuted
        .refutation
        .as_ref()
        .map_or("none".to_string(), |r| format!("{:?} -> {:?}", r.input.render(), r.image.render()));
    Outcome {
        pass,
        detail: format!(
            "(-1)^n n!: {} by {instance}; 1: {}; n+1: {}",
            refuted.verdict.label(),
            ones.verdict.label(),
            linear.verdict.label()
        ),
    }
}

fn main() {
    let mut failures = 0;
    check("C1 printed sign tables", c1_tables, &mut failures);
    check("C2 Laguerre family identity", c2_laguerre, &mut failures);
    check("C3 type statistic near 2e|a|", c3_statistic, &mut failures);
    check("C4 n0 bound battery", c4_thm2, &mut failures);
    check("C5 truncated counterexample violations", c5_thm3, &mut failures);
    check("C5 frozen violation indices", c5_goldens, &mut failures);
    check("C6 even/odd part battery", c6_lemma2, &mut failures);
    check("C7 Hermite-Biehler battery", c7_hermite_biehler, &mut failures);
    check("C8 even and odd members", c8_cor1, &mut failures);
    check("C9 modulus identity", c9_modulus, &mut failures);
    check("C10 multiplier refutation", c10_multiplier, &mut failures);
    println!("{failures} criteria failed");
    if failures > 0 {
        std::process::exit(1);
    }
}
