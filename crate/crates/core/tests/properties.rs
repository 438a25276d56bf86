use lpsign::functions::{
    build_function, classical_series, gaussian_series, laguerre_product_form, ClassicalFactor, FunctionSpec, RealParam,
    ZeroKind, ZeroSequence,
};
use lpsign::growth::{category_max, order_estimate, type_statistic, Category, Window};
use lpsign::hyperbolicity::random::{rng, same_sign_roots, upper_half_plane_zeros};
use lpsign::hyperbolicity::{
    apply_multiplier, even_odd_imaginary_check, from_complex_roots, hermite_biehler_check, is_hyperbolic,
    isolate_roots, MultiplierSequence,
};
use lpsign::signs::{even_modulus_identity, modulus_identity, sign_sequence, tail_check, SignSequence};
use lpsign::theorems::{corollary1_verify, thm1_hypothesis_check, thm2_n0_bound, Thm1Verdict};
use lpsign::{AnySeries, Ball, ExactPolynomial, TruncatedSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

fn series(max_len: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec(rational(), 1..=max_len)
}

fn exact(v: &[BigRational], order: usize) -> TruncatedSeries<BigRational> {
    TruncatedSeries::from_coeffs(v.to_vec(), order)
}

fn zero_const(mut v: Vec<BigRational>) -> Vec<BigRational> {
    v[0] = BigRational::zero();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mul_is_commutative(a in series(12), b in series(12)) {
        let (a, b) = (exact(&a, 10), exact(&b, 10));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn exp_is_a_homomorphism(s in series(6), t in series(6)) {
        let (s, t) = (exact(&zero_const(s), 8), exact(&zero_const(t), 8));
        let lhs = s.add(&t).exp().unwrap();
        let rhs = s.exp().unwrap().mul(&t.exp().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ball_results_enclose_exact_results(a in series(10), b in series(10)) {
        let (ea, eb) = (exact(&a, 9), exact(&b, 9));
        let (ba, bb) = (ea.to_balls(64), eb.to_balls(64));
        let pairs = [
            (ea.mul(&eb), ba.mul(&bb)),
            (ea.add(&eb), ba.add(&bb)),
            (ea.sub(&eb), ba.sub(&bb)),
        ];
        for (e, b) in pairs {
            for (x, y) in e.coeffs().iter().zip(b.coeffs()) {
                prop_assert!(y.contains_rational(x));
            }
        }
        let ez = exact(&zero_const(a), 9);
        let ex = ez.exp().unwrap();
        let bx = ez.to_balls(64).exp().unwrap();
        for (x, y) in ex.coeffs().iter().zip(bx.coeffs()) {
            prop_assert!(y.contains_rational(x));
        }
    }

    #[test]
    fn even_odd_parts_recompose(a in series(15)) {
        let s = exact(&a, 14);
        let (e, o) = s.even_odd_split();
        prop_assert!(e.is_even() && o.is_odd());
        prop_assert_eq!(e.add(&o), s);
    }

    #[test]
    fn tail_check_is_monotone_in_horizon(v in prop::collection::vec(-1i32..=1, 2..60), cut in 1usize..60) {
        let full = SignSequence::from_values(&v);
        let part = full.prefix(cut.min(v.len()));
        let long: BTreeSet<usize> = tail_check(&full).violations.into_iter().collect();
        for n in tail_check(&part).violations {
            prop_assert!(long.contains(&n));
        }
    }

    #[test]
    fn modulus_identities(mags in prop::collection::vec((1i64..=30, 1i64..=9), 2..14), t in (1i64..=5, 1i64..=4)) {
        let c: Vec<BigRational> = mags
            .iter()
            .enumerate()
            .map(|(n, &(a, b))| if (n / 2) % 2 == 0 { q(a, b) } else { -q(a, b) })
            .collect();
        let t = q(t.0, t.1);
        let s = TruncatedSeries::from_rationals(&c);
        prop_assert!(modulus_identity(&s, &t).unwrap().holds);
        let even: Vec<BigRational> = c
            .iter()
            .enumerate()
            .map(|(n, x)| if n % 2 == 0 { if (n / 2) % 2 == 0 { x.abs() } else { -x.abs() } } else { BigRational::zero() })
            .collect();
        let h = TruncatedSeries::from_rationals(&even);
        prop_assert!(even_modulus_identity(&h, &t).unwrap().holds);
    }

    #[test]
    fn category_max_laws(v in prop::collection::vec((0.0f64..3.0, 0.0f64..5.0), 3)) {
        let [a, b, c] = [v[0], v[1], v[2]].map(|(o, k)| Category::new(o, k));
        prop_assert_eq!(category_max(a, b), category_max(b, a));
        prop_assert_eq!(category_max(category_max(a, b), c), category_max(a, category_max(b, c)));
        prop_assert_eq!(category_max(a, a), a);
    }

    #[test]
    fn multiplier_is_linear(p in series(7), r in series(7), c in rational(), g in prop::collection::vec(rational(), 7)) {
        let seq = MultiplierSequence::from_list(g, "list");
        let (p, r) = (ExactPolynomial::new(p), ExactPolynomial::new(r));
        let lhs = apply_multiplier(&seq, &p.add(&r.scale(&c))).unwrap();
        let rhs = apply_multiplier(&seq, &p).unwrap().add(&apply_multiplier(&seq, &r).unwrap().scale(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sturm_agrees_with_planted_roots(roots in prop::collection::vec(rational(), 1..=8)) {
        let p = ExactPolynomial::from_roots(&roots);
        let distinct: BTreeSet<BigRational> = roots.iter().cloned().collect();
        prop_assert_eq!(isolate_roots(&p).unwrap().len(), distinct.len());
        prop_assert!(is_hyperbolic(&p).unwrap().is_hyperbolic());
        let bump = ExactPolynomial::new(vec![q(1, 1), BigRational::zero(), q(1, 1)]);
        prop_assert!(!is_hyperbolic(&p.mul(&bump)).unwrap().is_hyperbolic());
    }

    #[test]
    fn quadratic_verdict_matches_discriminant(r1 in rational(), r2 in rational(), eps in rational()) {
        let p = ExactPolynomial::from_roots(&[r1, r2]).add(&ExactPolynomial::constant(eps));
        let c = p.coeffs();
        let disc = &c[1] * &c[1] - q(4, 1) * &c[0] * &c[2];
        prop_assert_eq!(is_hyperbolic(&p).unwrap().is_hyperbolic(), !disc.is_negative());
    }

    #[test]
    fn laguerre_family_matches_product_form(ph in (-6i64..=6, 1i64..=4), an in (-8i64..=8, 1i64..=4)) {
        let phase = RealParam::Rational(q(ph.0, ph.1));
        let angle = RealParam::Rational(q(an.0, an.1));
        let f = ClassicalFactor::LaguerreFamily { phase: phase.clone(), angle: angle.clone() };
        let direct = match classical_series(&f, 20, 128).unwrap() {
            AnySeries::Approx(s) => s,
            AnySeries::Exact(s) => s.to_balls(128),
        };
        let product = laguerre_product_form(&phase, &angle, 20, 128);
        for (x, y) in direct.coeffs().iter().zip(product.coeffs()) {
            prop_assert!(x.overlaps(y));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn planted_half_plane_zeros_interlace(seed in any::<u64>()) {
        let zs = upper_half_plane_zeros(&mut rng(seed), 2, 6);
        let (u, v) = from_complex_roots(&zs);
        prop_assert!(hermite_biehler_check(&u, &v).unwrap().interlace);
        for j in 0..zs.len() {
            let mut w = zs.clone();
            w[j].im = -w[j].im.clone();
            let (u, v) = from_complex_roots(&w);
            prop_assert!(!hermite_biehler_check(&u, &v).unwrap().interlace);
        }
    }

    #[test]
    fn same_sign_parts_have_imaginary_zeros(seed in any::<u64>()) {
        let (p, _) = same_sign_roots(&mut rng(seed), 10, true);
        prop_assert!(even_odd_imaginary_check(&p).unwrap().pass());
    }

    #[test]
    fn thm2_bound_and_identity(roots in prop::collection::vec(-5i64..=5, 1..=6), a in prop::sample::select(vec![q(-1, 1), q(-1, 3), q(-2, 1)])) {
        let p = ExactPolynomial::from_roots(&roots.iter().map(|&r| q(r, 1)).collect::<Vec<_>>());
        let r = thm2_n0_bound(&p, &a, 200).unwrap();
        prop_assert!(r.bound_valid());
        prop_assert!(r.identities_hold());
    }

    #[test]
    fn finite_zero_gaussians_pass_thm1(roots in prop::collection::vec(rational(), 0..=4), a in prop::sample::select(vec![q(-1, 1), q(-1, 2)])) {
        let spec = FunctionSpec {
            gauss_a: a,
            product_factors: vec![ZeroSequence::explicit(roots.into_iter().filter(|r| !r.is_zero()).collect(), 0).unwrap()],
            ..Default::default()
        };
        let s = match build_function(&spec, 300, 256).unwrap() {
            AnySeries::Exact(s) => s,
            AnySeries::Approx(_) => unreachable!(),
        };
        let r = thm1_hypothesis_check(&s, 300, None).unwrap();
        prop_assert!(r.growth_ok);
        prop_assert_eq!(r.verdict, Thm1Verdict::Satisfied);
    }

    #[test]
    fn even_and_odd_members_never_violate(ys in prop::collection::vec(1i64..=6, 0..=3), k in 0u32..=1, a in prop::sample::select(vec![q(-1, 1), q(-1, 4)])) {
        let zeros: Vec<BigRational> = ys.iter().flat_map(|&y| [q(y, 1), q(-y, 1)]).collect();
        let spec = FunctionSpec {
            gauss_a: a,
            monomial_power: k,
            product_factors: vec![ZeroSequence::explicit(zeros, 0).unwrap()],
            ..Default::default()
        };
        let r = corollary1_verify(&spec, 300, 256).unwrap();
        prop_assert!(r.tail.violations.is_empty());
        prop_assert!(r.statistic_ok);
    }

    #[test]
    fn gaussian_order_and_type(roots in prop::collection::vec(-5i64..=5, 0..=3), a in prop::sample::select(vec![q(-1, 1), q(-1, 2), q(-2, 1)])) {
        let spec = FunctionSpec {
            gauss_a: a,
            product_factors: vec![ZeroSequence::explicit(roots.iter().filter(|&&r| r != 0).map(|&r| q(r, 1)).collect(), 0).unwrap()],
            ..Default::default()
        };
        let s = match build_function(&spec, 400, 256).unwrap() {
            AnySeries::Exact(s) => s,
            AnySeries::Approx(_) => unreachable!(),
        };
        for lo in [100, 200] {
            let w = Window::new(lo, 400, 400).unwrap();
            let rho = order_estimate(&s, w).unwrap().rho_hat.unwrap();
            prop_assert!((rho - 2.0).abs() / 2.0 < 0.05, "rho {}", rho);
            let sigma = type_statistic(&s, 2.0, w).unwrap().sigma_hat.unwrap();
            prop_assert!(sigma.is_finite() && sigma > 0.0);
        }
    }
}

#[test]
fn symmetric_products_are_even() {
    let z = ZeroSequence::new(ZeroKind::PowerLog { rho: q(3, 2), log_power: 1 }, 20, 1).unwrap();
    let s = build_function(&FunctionSpec { product_factors: vec![z], ..Default::default() }, 30, 128).unwrap();
    match s {
        AnySeries::Approx(b) => {
            for (n, c) in b.coeffs().iter().enumerate() {
                if n % 2 == 1 {
                    assert!(c.contains_zero());
                    assert_eq!(sign_sequence(&b).symbols().chars().nth(n), Some('0'));
                }
            }
        }
        AnySeries::Exact(_) => panic!("power-log zeros are irrational"),
    }
}

#[test]
fn rational_specs_have_zero_error() {
    let s = build_function(
        &FunctionSpec {
            gauss_a: q(-1, 3),
            lin_b: q(1, 2),
            classical_factors: vec![ClassicalFactor::CosSqrt],
            ..Default::default()
        },
        40,
        64,
    )
    .unwrap();
    assert!(s.is_exact());
    assert!(gaussian_series(&q(-1, 1), &q(0, 1), 10).coeffs()[2] == q(-1, 1));
}

#[test]
fn borel_trend_toward_exponent() {
    // Windowed max of n ln n / (-ln|a_n|) over [N/2, N] for growing N.
    for rho in [q(1, 1), q(3, 2)] {
        let z = ZeroSequence::new(ZeroKind::PowerLog { rho: rho.clone(), log_power: 1 }, 600, 1).unwrap();
        let s = match build_function(&FunctionSpec { product_factors: vec![z], ..Default::default() }, 240, 256).unwrap() {
            AnySeries::Approx(b) => b,
            AnySeries::Exact(_) => panic!(),
        };
        let maxima: Vec<f64> = [60, 120, 240]
            .iter()
            .map(|&n| order_estimate(&s, Window::tail(n).unwrap()).unwrap().rho_windowed_max.unwrap())
            .collect();
        let target = num_traits::ToPrimitive::to_f64(&rho).unwrap();
        assert!(maxima.windows(2).all(|w| w[1] < w[0]), "{maxima:?}");
        assert!(maxima.iter().all(|&m| m > target), "{maxima:?}");
    }
}

#[test]
fn ball_sign_certification_is_conservative() {
    let b = Ball::from_rational(&q(1, 3), 64);
    assert_eq!(b.sign(), Some(1));
    let c = &b - &Ball::from_rational(&q(1, 3), 64);
    assert!(c.contains_zero());
}
